#ifndef HINDMAN_SHEVRIN_HPP_
#define HINDMAN_SHEVRIN_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "hindman/coloring.hpp"
#include "hindman/families.hpp"
#include "hindman/semigroup.hpp"

namespace hindman {

  //! A coloring of the edges of the complete graph on vertices 0..v-1.
  //! Colors are opaque ids; only equality matters.
  class EdgeColoring {
   public:
    explicit EdgeColoring(std::size_t vertices, std::uint32_t fill = 0);

    [[nodiscard]] std::size_t vertices() const noexcept {
      return v_;
    }

    [[nodiscard]] std::uint32_t color(std::size_t i, std::size_t j) const {
      return colors_[slot(i, j)];
    }

    void set(std::size_t i, std::size_t j, std::uint32_t c) {
      colors_[slot(i, j)] = c;
    }

   private:
    std::size_t slot(std::size_t i, std::size_t j) const;

    std::size_t                v_;
    std::vector<std::uint32_t> colors_;  // pairs i < j, row-major
  };

  //! Lexicographically least set of exactly `target` vertices whose edges
  //! all share one color; nullopt if there is none. Any vertex set of size
  //! <= 1 is trivially monochromatic.
  std::optional<std::vector<std::size_t>> ramsey_find(EdgeColoring const& edges,
                                                      std::size_t target);

  //! (a^3, a^2, ab, ba) for a pair a = seq[i], b = seq[j], i < j.
  using PairColor = std::array<element_index, 4>;

  struct PairColoring {
    EdgeColoring           edges;
    std::vector<PairColor> palette;  // color id -> tuple, by first appearance
  };

  //! Throws NotOutsideS2 if some element of seq is a product, and
  //! PrecondViolation on repeats.
  PairColoring shevrin_pair_coloring(FiniteSemigroup const&         S,
                                     std::span<element_index const> seq);

  struct EqualityAudit {
    element_index sq, ab, ba, be2;  // b^2, b2 b3, b3 b2, (b e)^2
    bool ab_eq_ba, ab_eq_sq, ab_eq_be2, ba_eq_sq, ba_eq_be2, sq_eq_be2;
    //! n in [2, h+d-1] with b^n = b2 b3 (resp. b3 b2), if any.
    std::optional<std::size_t> ab_power, ba_power;
    //! b2 b3 is a power of b  <=>  b2 b3 in {b^2, (be)^2}; same for b3 b2.
    bool ab_biconditional, ba_biconditional;
  };

  struct TypeHDCertificate {
    std::vector<element_index> source;
    std::size_t                prefix_length;
    std::vector<std::size_t>   positions;     // indices into source
    std::vector<element_index> subsequence;   // b2, b3, ...
    PairColor                  color;         // (cube, square, ab, ba)
    std::size_t                h, d;
    HDReport                   relations;
    //! Pairwise identities b_i^3 = b2^3, b_i^2 = b2^2, b_i b_j = b2 b3,
    //! b_j b_i = b3 b2 for i < j, re-checked on the table.
    bool                       pair_identities;
    //! HD3 re-checked per case of the first two indices: i<j, i>j, i=j.
    std::array<bool, 3>        hd3_cases;
    element_set                structure_set;  // predicted T
    element_set                closure_set;    // closure of the b's
    bool                       structure_matches;
    element_index              idempotent;
    bool                       unique_idempotent;
    EqualityAudit              audit;

    [[nodiscard]] bool all_pass() const noexcept {
      return h > 1 && relations.all_pass() && pair_identities
             && hd3_cases[0] && hd3_cases[1] && hd3_cases[2]
             && structure_matches && unique_idempotent
             && audit.ab_biconditional && audit.ba_biconditional;
    }
  };

  //! Ramsey extraction of a type [h,d] subsemigroup from a sequence of
  //! non-products. Throws RamseyFail, NotOutsideS2 or PrecondViolation.
  TypeHDCertificate extract_typehd(FiniteSemigroup const&         S,
                                   std::span<element_index const> seq,
                                   std::size_t                    target = 6);

  //! Elements of S outside S^2, in id order.
  std::vector<element_index> non_products(FiniteSemigroup const& S);

  struct Pattern {
    std::size_t                size = 0;
    std::vector<element_index> witness;
  };

  struct PatternReport {
    Pattern     right_zero;
    Pattern     left_zero;
    Pattern     max_chain;  // listed so that ab = later of a, b
    Pattern     min_chain;  // listed so that ab = earlier of a, b
    Pattern     fan;        // bottom first
    Pattern     subgroup;   // identity first
    std::size_t square_size;
  };

  //! Largest instance of each Shevrin-list pattern, sizes capped at bound.
  PatternReport classify_patterns(FiniteSemigroup const& S, std::size_t bound);

  // Direct table checks for classify_patterns witnesses.
  bool is_right_zero(FiniteSemigroup const& S, std::span<element_index const> X);
  bool is_left_zero(FiniteSemigroup const& S, std::span<element_index const> X);
  bool is_max_chain(FiniteSemigroup const& S, std::span<element_index const> X);
  bool is_min_chain(FiniteSemigroup const& S, std::span<element_index const> X);
  bool is_fan(FiniteSemigroup const& S, std::span<element_index const> X);
  bool is_subgroup(FiniteSemigroup const& S, std::span<element_index const> X);

  enum class Thm35Case { finsync, z2sum };

  struct Thm35Report {
    Thm35Case   which;
    element_set exception_set;  // F (finsync) or empty
    element_set ambient;        // the finsync semigroup or the Z2-sum subgroup
    std::size_t rank = 0;       // z2sum only
    std::vector<element_index> generators;
    element_set                subsemigroup;
    MonoVerdict                verdict;
    bool                       pass;
  };

  //! Desk-scale constructive check that a finitely synchronizing semigroup,
  //! or one containing a Z2-sum, carries an almost-monochromatic
  //! subsemigroup. Throws CaseInapplicable.
  Thm35Report verify_thm35_direction3to1(FiniteSemigroup const& S,
                                         Coloring const&        c,
                                         Thm35Case              which);

  //! Largest exponent-2 subgroup found greedily inside the maximal
  //! subgroups of S, sorted.
  element_set largest_boolean_subgroup(FiniteSemigroup const& S);

}  // namespace hindman

#endif  // HINDMAN_SHEVRIN_HPP_

#ifndef HINDMAN_FAMILIES_HPP_
#define HINDMAN_FAMILIES_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

#include "hindman/semigroup.hpp"

namespace hindman {

  enum class FamilyKind {
    nat_plus,     // (N, +)
    nat_max,      // (N, max)
    nat_min,      // (N, min)
    right_zero,   // ab = b
    left_zero,    // ab = a
    fan,          // m^n = 1 for m != n
    z2_sum,       // (Z_2)^k
    why_mod_fin,  // {0..k-1} u {kj+1 : 1 <= j <= M}, addition mod k
    type_hd,      // type [h,d] normal-form model on m generators
    zero,         // n generators plus an absorbing z, all products z
    cyclic,       // Z_n
    monogenic     // <b> with b^h = b^(h+d)
  };

  //! The four mergeable non-generator tokens of a type [h,d] model: x1^2,
  //! x1x2, x2x1 and (x1 e)^2.
  enum class HDToken { SQ, AB, BA, X1E2 };

  //! A partition of the HD tokens; tokens in one block are identified.
  //! Singleton blocks may be omitted.
  using EqPattern = std::vector<std::vector<HDToken>>;

  struct FamilySpec {
    FamilyKind  kind;
    std::size_t n     = 0;  // N, n or k depending on kind
    std::size_t count = 0;  // M for why_mod_fin
    std::size_t h = 0, d = 0, m = 0;
    EqPattern   pattern = {};
  };

  //! Grammar: natplus | natmax:N | natmin:N | rzero:n | lzero:n | fan:N
  //! | z2sum:k | whymodfin:k,M | typehd:h,d,m[,pattern] | zero:n | cyclic:n
  //! | monogenic:h,d. Pattern blocks are tokens joined by '=', blocks
  //! separated by ';' (e.g. "AB=BA;SQ"). Throws BadSpec.
  FamilySpec  parse_family_spec(std::string_view text);
  std::string to_string(FamilySpec const& spec);
  std::string to_string(HDToken t);

  using FamilyInstance = std::variant<FiniteSemigroup, LazyFamily>;

  //! nat_plus, nat_max, nat_min and fan give a LazyFamily, the rest a
  //! FiniteSemigroup.
  FamilyInstance build_family(FamilySpec const& spec);

  //! The finite semigroup for a spec: lazy families are truncated to their
  //! first spec.n elements (natplus to `natplus_truncation`); throws
  //! EscapesTruncation when the truncation is not closed.
  FiniteSemigroup materialize(FamilySpec const& spec,
                              std::size_t       natplus_truncation = 0);

  LazyFamily nat_plus();
  LazyFamily nat_max();
  LazyFamily nat_min();
  LazyFamily fan();

  FiniteSemigroup right_zero(std::size_t n);
  FiniteSemigroup left_zero(std::size_t n);
  FiniteSemigroup z2_sum(std::size_t k);
  FiniteSemigroup why_mod_fin(std::size_t k, std::size_t M);
  FiniteSemigroup zero_semigroup(std::size_t n);
  FiniteSemigroup cyclic_group(std::size_t n);
  FiniteSemigroup monogenic(std::size_t h, std::size_t d);

  ////////////////////////////////////////////////////////////////////////
  // Type [h,d]
  ////////////////////////////////////////////////////////////////////////

  struct TypeHDModel {
    FiniteSemigroup            semigroup;
    std::size_t                h, d;
    EqPattern                  pattern;
    std::vector<element_index> generators;
    //! Token names carried by each element ("x3", "Pow(4)", "AB", "SQ",
    //! "X1E2", ...); merged tokens share an element.
    std::vector<std::vector<std::string>> tokens;
    //! powers[p] = element x1^p for 1 <= p <= h+d-1 (powers[0] unused).
    std::vector<element_index> powers;
    element_index              ab, ba;
    element_index              idempotent;
    //! Exponent q with (x1 e)^2 = x1^q.
    std::size_t                x1e2_power;
  };

  //! h + ((p - h) mod d) for p >= h, else p.
  [[nodiscard]] constexpr std::size_t reduce_power(std::size_t p,
                                                   std::size_t h,
                                                   std::size_t d) noexcept {
    return p < h ? p : h + (p - h) % d;
  }

  //! The unique p in [h, h+d-1] with p = 0 mod d.
  [[nodiscard]] constexpr std::size_t idempotent_power(std::size_t h,
                                                       std::size_t d) noexcept {
    return h + (d - h % d) % d;
  }

  //! Throws BadSpec on h <= 1, d == 0 or m < 2, and BadPattern when the
  //! identifications do not give a semigroup with free generators.
  TypeHDModel build_typehd(std::size_t h, std::size_t d, std::size_t m,
                           EqPattern const& pattern = {});

  struct RelationCheck {
    bool        pass = true;
    std::string counterexample;
  };

  struct HDReport {
    RelationCheck hd1, hd2, hd3, hd4, generators_outside_s2;

    [[nodiscard]] bool all_pass() const noexcept {
      return hd1.pass && hd2.pass && hd3.pass && hd4.pass
             && generators_outside_s2.pass;
    }
  };

  //! Checks HD1-HD4 exhaustively for the generator list `gens` of S, plus
  //! gens disjoint from S^2.
  HDReport verify_hd(FiniteSemigroup const&         S,
                     std::span<element_index const> gens,
                     std::size_t                    h,
                     std::size_t                    d);
  HDReport verify_hd(TypeHDModel const& model);

  struct S2Report {
    std::size_t size_s;
    std::size_t size_s2;
    std::size_t bound;  // 3 + (h + d - 2)
    bool        generators_disjoint;
    bool        within_bound;
  };

  S2Report verify_s2_finite(TypeHDModel const& model);

  struct SheReport {
    bool generates = false;

    bool premise_a = false;
    //! (a, b, c) with abc different from the first triple product.
    std::optional<std::array<element_index, 3>> premise_a_witness;
    bool        premise_b = false;
    std::size_t h = 0, d = 0;

    // Conclusions; only evaluated when both premises hold.
    bool                         c1_cube_is_orbit_cube = false;
    std::optional<element_index> c1_witness;  // generator a with S^3 != <a>^3
    std::size_t                  s3_size = 0;
    bool                         c2_s3_finite = false;
    bool                         c3_unique_idempotent = false;
    std::optional<element_index> idempotent;
    bool                         c4_ae_equal = false;
    std::optional<std::array<element_index, 2>> c4_witness;

    [[nodiscard]] bool premises_hold() const noexcept {
      return generates && premise_a && premise_b;
    }

    [[nodiscard]] bool all_pass() const noexcept {
      return premises_hold() && c1_cube_is_orbit_cube && c2_s3_finite
             && c3_unique_idempotent && c4_ae_equal;
    }
  };

  SheReport verify_lemma_she(FiniteSemigroup const&         S,
                             std::span<element_index const> A);

}  // namespace hindman

#endif  // HINDMAN_FAMILIES_HPP_

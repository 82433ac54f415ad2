#ifndef HINDMAN_COLORING_HPP_
#define HINDMAN_COLORING_HPP_

#include <cstddef>   // for size_t
#include <iosfwd>    // for istream, ostream
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "hindman/semigroup.hpp"

namespace hindman {

  inline constexpr color_index red   = 0;
  inline constexpr color_index green = 1;

  //! A total coloring of element ids 0..size()-1 with palette_size colors.
  class Coloring {
   public:
    Coloring(std::vector<color_index> assign, std::size_t palette_size);

    static Coloring constant(std::size_t n, color_index c = 0,
                             std::size_t palette_size = 1);

    [[nodiscard]] color_index operator()(element_index x) const {
      return assign_[x];
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return assign_.size();
    }
    [[nodiscard]] std::size_t palette_size() const noexcept {
      return palette_;
    }
    [[nodiscard]] std::vector<color_index> const& assignment() const noexcept {
      return assign_;
    }

    bool operator==(Coloring const&) const = default;

   private:
    std::vector<color_index> assign_;
    std::size_t              palette_;
  };

  //! Colors defined on some elements only.
  using PartialColoring = std::vector<std::optional<color_index>>;

  struct MonoVerdict {
    bool        is_mono;
    color_index majority_color;
    element_set exceptions;
  };

  //! Majority color (ties to the lowest id) and the elements not having it.
  //! Duplicates in A count with multiplicity for the majority.
  MonoVerdict mono_check(std::span<element_index const> A, Coloring const& c);

  bool almost_mono_check(std::span<element_index const> A, Coloring const& c,
                         std::size_t budget);

  //! Block index of t >= 1 when N is cut into consecutive blocks of lengths
  //! 1, 2, 3, ...: the least j with j(j+1)/2 >= t.
  std::size_t ncolor_block(std::size_t t);

  //! Color of t >= 1: blocks alternate red, green, starting red.
  color_index ncolor_color(std::size_t t);

  //! Coloring of {1..N}; element id i stands for the natural number i+1.
  Coloring ncolor(std::size_t N);

  struct NcolorReport {
    struct Row {
      std::size_t n;
      std::size_t blocks_checked;
      bool        pass;
      //! First block (start, length) without a multiple of n, if any.
      std::optional<std::pair<std::size_t, std::size_t>> failure;
    };
    std::size_t      N;
    std::vector<Row> rows;

    [[nodiscard]] bool all_pass() const noexcept;
  };

  //! For n = 1..maxn, every maximal monochromatic block of length >= n lying
  //! entirely within {1..N} contains a multiple of n.
  NcolorReport verify_ncolor_property(std::size_t N, std::size_t maxn);

  //! Whether the multiples of n in {1..N} (a prefix of <n> in (N,+)) meet
  //! every color of c; c colors {1..N} as in ncolor.
  bool multiples_meet_all_colors(Coloring const& c, std::size_t n);

  //! Pairs {g, g^-1} with g of order > 2 get colors {0, 1}, lower id 0.
  //! Throws NotAGroup.
  PartialColoring gcolor(FiniteSemigroup const& G);

  //! Finite analog of the two-coloring that defeats almost-monochromatic
  //! subsemigroups; see README for the exact construction.
  struct TrueColoring {
    Coloring                   coloring;
    std::vector<element_index> orbit_bases;  // selected long orbits
  };

  TrueColoring truecolor(FiniteSemigroup const& S, std::size_t long_orbit);

  //! Construction-level checks of a truecolor output.
  struct TrueColorAudit {
    std::size_t long_orbit      = 0;
    std::size_t orbits_selected = 0;
    bool        disjoint        = true;  // selected orbits pairwise disjoint
    bool        pattern         = true;  // ncolor pattern along each orbit
    //! For each selected orbit of size >= (j+1)(j+2)/2, the powers
    //! s^j, s^2j, ... inside it meet both colors.
    bool        sub_orbits      = true;
    //! g and g^-1 differ in color unless both lie on selected orbits.
    bool        inverse_pairs   = true;
    std::optional<element_index> witness;  // first offending element

    [[nodiscard]] bool all_pass() const noexcept {
      return disjoint && pattern && sub_orbits && inverse_pairs;
    }
  };

  TrueColorAudit audit_truecolor(FiniteSemigroup const& S,
                                 std::size_t            long_orbit);

  //! color(a) = a mod k where a is the integer label of a. Throws
  //! PrecondViolation on non-integer labels.
  Coloring mod_coloring(FiniteSemigroup const& S, std::size_t k);

  //! Text format: "coloring v1", "palette=<p>", then "<id> <color>" for
  //! every id 0..n-1.
  void        write_coloring(std::ostream& os, Coloring const& c);
  std::string to_coloring_text(Coloring const& c);
  Coloring    read_coloring(std::istream& is, std::size_t n);

}  // namespace hindman

#endif  // HINDMAN_COLORING_HPP_

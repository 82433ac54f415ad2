#ifndef HINDMAN_FPSETS_HPP_
#define HINDMAN_FPSETS_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t, uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "hindman/coloring.hpp"
#include "hindman/semigroup.hpp"

namespace hindman {

  inline constexpr std::size_t fp_cap       = 20;
  inline constexpr std::size_t fphat_cap    = 8;
  inline constexpr std::size_t refine_cap   = 16;

  //! Indices (0-based) into the sequence, in multiplication order.
  using Word = std::vector<std::uint8_t>;

  //! The finite products of a sequence: FP (increasing words) or FP-hat
  //! (duplicate-free words, any order).
  struct FpFamily {
    std::vector<element_index> seq;
    bool                       hat;
    std::vector<Word>          words;
    std::vector<element_index> values;  // values[i] = fold of words[i]
    element_set                value_set;
  };

  //! 2^n - 1.
  std::uint64_t fp_word_count(std::size_t n);
  //! Sum over m = 1..n of n!/(n-m)!.
  std::uint64_t fphat_word_count(std::size_t n);

  //! Throws PrecondViolation if seq has repeats, CapExceeded above `cap`.
  FpFamily fp(FiniteSemigroup const& S, std::span<element_index const> seq,
              std::size_t cap = fp_cap);
  FpFamily fphat(FiniteSemigroup const& S, std::span<element_index const> seq,
                 std::size_t cap = fphat_cap);

  //! Value sets only, without materializing words.
  element_set fp_values(FiniteSemigroup const&         S,
                        std::span<element_index const> seq);
  element_set fphat_values(FiniteSemigroup const&         S,
                           std::span<element_index const> seq);

  struct FpWitness {
    std::vector<element_index> seq;
    color_index                color;
    element_set                exceptions;  // F: FP values not of `color`
  };

  //! Lexicographically least sequence of n distinct elements whose FP set
  //! has some color covering all but at most `budget` of its values.
  std::optional<FpWitness> search_fp_mod_finite(FiniteSemigroup const& S,
                                                Coloring const&        c,
                                                std::size_t            n,
                                                std::size_t            budget);

  struct MonoSubsemigroup {
    std::vector<element_index> generators;
    element_set                elements;
    MonoVerdict                verdict;
  };

  //! Largest closure of at most max_gens generators (drawn from `universe`,
  //! or all of S if empty) that is almost-monochromatic within `budget`;
  //! ties go to the lexicographically least element set.
  std::optional<MonoSubsemigroup>
  search_mono_subsemigroup(FiniteSemigroup const&         S,
                           Coloring const&                c,
                           std::size_t                    budget,
                           std::size_t                    max_gens = 3,
                           std::span<element_index const> universe = {});

  struct Refinement {
    std::vector<std::size_t>   positions;    // indices into the input seq
    std::vector<element_index> subsequence;
    element_set                fphat_values;
    MonoVerdict                verdict;
  };

  //! Greedy subsequence of seq, in a group S, whose unordered products avoid
  //! F: each new element is taken from outside P^-1 F P^-1, where P holds
  //! the identity and every product of distinct chosen elements. Throws
  //! NotAGroup, and StuckAt when fewer than min_length elements are chosen.
  Refinement refine_fphat(FiniteSemigroup const&         S,
                          Coloring const&                c,
                          std::span<element_index const> seq,
                          std::span<element_index const> F,
                          std::size_t                    min_length = 1);

  struct WhyModFinReport {
    std::size_t k, M;
    std::size_t subsets_checked = 0;
    //! First k-subset of the kN+1 part (as values) whose FP set misses a
    //! residue color, with the missing colors.
    std::optional<std::vector<std::int64_t>> failure  = {};
    std::vector<color_index>                 missing  = {};

    [[nodiscard]] bool pass() const noexcept {
      return !failure;
    }
  };

  //! Exhaustive over all k-subsets of {kj+1 : 1 <= j <= M}: the FP set of
  //! each, colored by value mod k, realizes all k colors.
  WhyModFinReport verify_why_mod_fin(std::size_t k, std::size_t M);

}  // namespace hindman

#endif  // HINDMAN_FPSETS_HPP_

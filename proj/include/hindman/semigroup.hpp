#ifndef HINDMAN_SEMIGROUP_HPP_
#define HINDMAN_SEMIGROUP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t, uint32_t
#include <functional>   // for function
#include <limits>       // for numeric_limits
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "hindman/types.hpp"

namespace hindman {

  //! A finite semigroup given by its Cayley table.
  //!
  //! Construction validates the table: it must be square with entries in
  //! range, and associative. Up to \ref eager_assoc_limit elements every
  //! triple is checked; above that a fixed pseudo-random sample of triples
  //! is checked. Instances are immutable.
  class FiniteSemigroup {
   public:
    static constexpr std::size_t eager_assoc_limit = 512;
    static constexpr std::size_t sampled_triples   = std::size_t(1) << 24;

    FiniteSemigroup(std::vector<std::string>                       labels,
                    std::vector<std::vector<element_index>> const& table);

    [[nodiscard]] std::size_t size() const noexcept {
      return n_;
    }

    [[nodiscard]] element_index product(element_index a,
                                        element_index b) const noexcept {
      return table_[std::size_t(a) * n_ + b];
    }

    [[nodiscard]] std::span<element_index const> row(element_index a) const {
      return {table_.data() + std::size_t(a) * n_, n_};
    }

    [[nodiscard]] std::string const& label(element_index a) const {
      return labels_[a];
    }

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    [[nodiscard]] std::optional<element_index>
    find(std::string_view label) const;

    //! Left-to-right fold of the operation over a nonempty word.
    [[nodiscard]] element_index
    fold(std::span<element_index const> word) const;

    //! s^k for k >= 1.
    [[nodiscard]] element_index power(element_index s, std::size_t k) const;

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    std::size_t                n_;
    std::vector<std::string>   labels_;
    std::vector<element_index> table_;
  };

  //! Validating constructor; throws RangeError or AssocViolation.
  FiniteSemigroup build_cayley(std::vector<std::string>                labels,
                               std::vector<std::vector<element_index>> table);

  //! The subsemigroup on `elements` (which must be closed), relabelled
  //! 0..k-1 in the order given.
  FiniteSemigroup restrict_to(FiniteSemigroup const&         S,
                              std::span<element_index const> elements);

  ////////////////////////////////////////////////////////////////////////
  // Lazy (infinite) families and their truncations
  ////////////////////////////////////////////////////////////////////////

  class Truncation;

  //! An infinite semigroup given by an injective enumerator and a
  //! computable operation on canonical integer encodings.
  class LazyFamily {
   public:
    using value_type = std::int64_t;

    LazyFamily(std::string                                      name,
               std::function<value_type(std::size_t)>           enumerate,
               std::function<value_type(value_type, value_type)> op);

    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }

    [[nodiscard]] value_type enumerate(std::size_t i) const {
      return enumerate_(i);
    }

    [[nodiscard]] value_type product(value_type a, value_type b) const {
      return op_(a, b);
    }

    //! Universe = first n enumerated elements; products leaving it are
    //! marked as escaping rather than wrapped.
    [[nodiscard]] Truncation truncate(std::size_t n) const;

   private:
    std::string                                        name_;
    std::function<value_type(std::size_t)>             enumerate_;
    std::function<value_type(value_type, value_type)>  op_;
  };

  class Truncation {
   public:
    using value_type = LazyFamily::value_type;
    static constexpr element_index escapes
        = std::numeric_limits<element_index>::max();

    Truncation(std::vector<value_type> values, std::vector<element_index> table);

    [[nodiscard]] std::size_t size() const noexcept {
      return values_.size();
    }

    //! Returns \ref escapes if the product lies outside the truncation.
    [[nodiscard]] element_index product(element_index a,
                                        element_index b) const noexcept {
      return table_[std::size_t(a) * size() + b];
    }

    [[nodiscard]] value_type value(element_index a) const {
      return values_[a];
    }

    [[nodiscard]] std::vector<value_type> const& values() const noexcept {
      return values_;
    }

    [[nodiscard]] std::optional<element_index> index_of(value_type v) const;

    [[nodiscard]] bool closed() const noexcept {
      return escape_count_ == 0;
    }

    [[nodiscard]] std::size_t escape_count() const noexcept {
      return escape_count_;
    }

    [[nodiscard]] std::vector<std::pair<element_index, element_index>>
    escaping_pairs() const;

    //! Throws EscapesTruncation unless closed().
    [[nodiscard]] FiniteSemigroup semigroup() const;

   private:
    std::vector<value_type>    values_;
    std::vector<element_index> table_;
    std::size_t                escape_count_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  //! Least subset containing `gens` and closed under the operation, in BFS
  //! discovery order.
  std::vector<element_index> closure_order(FiniteSemigroup const&         S,
                                           std::span<element_index const> gens);

  //! closure_order, sorted.
  element_set closure(FiniteSemigroup const&         S,
                      std::span<element_index const> gens);

  //! S^2 = {ab : a, b in S}.
  element_set square(FiniteSemigroup const& S);

  //! The monogenic subsemigroup <s> = {s, s^2, ...}.
  struct Orbit {
    element_index              base;
    std::vector<element_index> elements;  // s, s^2, ..., s^(h+d-1)
    std::size_t                index_h;
    std::size_t                period_d;
    element_set                group_part;  // {s^h, ..., s^(h+d-1)}
  };

  Orbit orbit(FiniteSemigroup const& S, element_index s);

  //! Throws EscapesTruncation if some power of s leaves the truncation.
  Orbit orbit(Truncation const& T, element_index s);

  element_set idempotents(FiniteSemigroup const& S);

  struct SubgroupInfo {
    element_index idempotent;
    element_set   elements;
    bool          exponent_le_2;
  };

  //! G(e), the largest subgroup with identity e. Throws NotIdempotent.
  SubgroupInfo maximal_subgroup(FiniteSemigroup const& S, element_index e);

  //! The identity if S is a group: unique idempotent, two-sided identity,
  //! every element invertible.
  std::optional<element_index> group_identity(FiniteSemigroup const& S);

  //! Inverse of x in a subgroup with identity e; nullopt if none.
  std::optional<element_index> inverse(FiniteSemigroup const& S,
                                       element_index e, element_index x);

  enum class Periodicity { periodic, not_periodic, unknown_at_bound };

  struct PeriodicReport {
    Periodicity                          verdict;
    std::optional<LazyFamily::value_type> escaping_witness;
  };

  [[nodiscard]] inline bool is_periodic(FiniteSemigroup const&) noexcept {
    return true;
  }

  //! Follows the powers of each of the first `bound` elements for at most
  //! `bound` steps.
  PeriodicReport is_periodic(LazyFamily const& fam, std::size_t bound);

  //! nullopt if ab in {a, b} for all a, b; else the lex-least violating pair.
  std::optional<std::pair<element_index, element_index>>
  synchronizing_check(FiniteSemigroup const& S);

  //! The forced exception set {ab : ab not in {a, b}} if it has at most
  //! max_f elements.
  std::optional<element_set> finitely_synchronizing_check(FiniteSemigroup const& S,
                                                         std::size_t max_f);

  struct MovingReport {
    std::vector<LazyFamily::value_type> best_tuple;
    std::size_t                         bad_count;
    std::size_t                         tuples_examined;
  };

  //! #{s among the first `horizon` elements : a*s in F for every a in tuple}.
  std::size_t count_trapped(LazyFamily const&                        fam,
                            std::span<LazyFamily::value_type const>  tuple,
                            std::span<LazyFamily::value_type const>  F,
                            std::size_t                              horizon);

  //! Bounded evidence for the moving property: the k-subset of A with the
  //! fewest trapped s (lex-least on ties).
  MovingReport moving_evidence(LazyFamily const&                       fam,
                               std::span<LazyFamily::value_type const> A,
                               std::span<LazyFamily::value_type const> F,
                               std::size_t k, std::size_t horizon);

  struct BooleanBasis {
    std::vector<element_index> basis;
    bool                       commutative;
  };

  //! Greedy basis of a group of exponent <= 2. Throws NotAGroup or
  //! OrderViolation with the least element of order > 2.
  BooleanBasis boolean_group_basis(FiniteSemigroup const& G);

  //! Same, for a subgroup of S (basis in S's indices).
  BooleanBasis boolean_group_basis(FiniteSemigroup const& S,
                                   SubgroupInfo const&    G);

}  // namespace hindman

#endif  // HINDMAN_SEMIGROUP_HPP_

#include "hindman/semigroup.hpp"

#include <algorithm>      // for sort, find, all_of
#include <random>         // for mt19937_64
#include <unordered_map>  // for unordered_map

#include "hindman/errors.hpp"

namespace hindman {

  namespace {

    std::string triple_message(FiniteSemigroup const& S,
                               element_index          a,
                               element_index          b,
                               element_index          c) {
      return "associativity fails at (" + S.label(a) + ", " + S.label(b) + ", "
             + S.label(c) + ") = ids (" + std::to_string(a) + ", "
             + std::to_string(b) + ", " + std::to_string(c) + ")";
    }

    void check_triple(FiniteSemigroup const& S,
                      element_index          a,
                      element_index          b,
                      element_index          c) {
      if (S.product(S.product(a, b), c) != S.product(a, S.product(b, c))) {
        throw AssocViolation(a, b, c, triple_message(S, a, b, c));
      }
    }

    void check_associative(FiniteSemigroup const& S) {
      auto const n = static_cast<element_index>(S.size());
      if (S.size() <= FiniteSemigroup::eager_assoc_limit) {
        for (element_index a = 0; a < n; ++a) {
          for (element_index b = 0; b < n; ++b) {
            auto const ab = S.product(a, b);
            for (element_index c = 0; c < n; ++c) {
              if (S.product(ab, c) != S.product(a, S.product(b, c))) {
                throw AssocViolation(a, b, c, triple_message(S, a, b, c));
              }
            }
          }
        }
        return;
      }
      // Fixed seed: the sample is the same on every run.
      std::mt19937_64                              gen(0x5eed5eedULL);
      std::uniform_int_distribution<element_index> pick(0, n - 1);
      for (std::size_t i = 0; i < FiniteSemigroup::sampled_triples; ++i) {
        check_triple(S, pick(gen), pick(gen), pick(gen));
      }
    }

    template <typename Product>
    Orbit power_orbit(element_index s, Product&& product) {
      Orbit                                        result{s, {}, 0, 0, {}};
      std::unordered_map<element_index, std::size_t> seen;
      element_index                                x = s;
      for (std::size_t k = 1;; ++k) {
        auto [it, inserted] = seen.emplace(x, k);
        if (!inserted) {
          result.index_h  = it->second;
          result.period_d = k - it->second;
          break;
        }
        result.elements.push_back(x);
        x = product(x, s);
      }
      result.group_part.assign(result.elements.begin() + (result.index_h - 1),
                               result.elements.end());
      std::sort(result.group_part.begin(), result.group_part.end());
      return result;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(
      std::vector<std::string>                       labels,
      std::vector<std::vector<element_index>> const& table)
      : n_(table.size()), labels_(std::move(labels)), table_() {
    if (n_ == 0) {
      throw RangeError("a semigroup must have at least one element");
    }
    if (labels_.size() != n_) {
      throw RangeError("expected " + std::to_string(n_) + " labels, got "
                       + std::to_string(labels_.size()));
    }
    table_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (table[i].size() != n_) {
        throw RangeError("row " + std::to_string(i) + " has "
                         + std::to_string(table[i].size())
                         + " entries, expected " + std::to_string(n_));
      }
      for (auto x : table[i]) {
        if (x >= n_) {
          throw RangeError("entry " + std::to_string(x) + " in row "
                           + std::to_string(i) + " is out of range");
        }
        table_.push_back(x);
      }
    }
    check_associative(*this);
  }

  std::optional<element_index>
  FiniteSemigroup::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      return std::nullopt;
    }
    return static_cast<element_index>(it - labels_.begin());
  }

  element_index
  FiniteSemigroup::fold(std::span<element_index const> word) const {
    if (word.empty()) {
      throw PrecondViolation("cannot fold the empty word");
    }
    element_index x = word[0];
    for (std::size_t i = 1; i < word.size(); ++i) {
      x = product(x, word[i]);
    }
    return x;
  }

  element_index FiniteSemigroup::power(element_index s, std::size_t k) const {
    if (k == 0) {
      throw PrecondViolation("power exponent must be >= 1");
    }
    element_index x = s;
    for (std::size_t i = 1; i < k; ++i) {
      x = product(x, s);
    }
    return x;
  }

  FiniteSemigroup build_cayley(std::vector<std::string>                labels,
                               std::vector<std::vector<element_index>> table) {
    return FiniteSemigroup(std::move(labels), table);
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const&         S,
                              std::span<element_index const> elements) {
    std::unordered_map<element_index, element_index> pos;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      pos.emplace(elements[i], static_cast<element_index>(i));
    }
    std::vector<std::string>                labels;
    std::vector<std::vector<element_index>> table;
    for (auto a : elements) {
      labels.push_back(S.label(a));
      auto& row = table.emplace_back();
      for (auto b : elements) {
        auto it = pos.find(S.product(a, b));
        if (it == pos.end()) {
          throw PrecondViolation("subset is not closed: " + S.label(a) + "*"
                                 + S.label(b) + " leaves it");
        }
        row.push_back(it->second);
      }
    }
    return FiniteSemigroup(std::move(labels), table);
  }

  ////////////////////////////////////////////////////////////////////////
  // LazyFamily / Truncation
  ////////////////////////////////////////////////////////////////////////

  LazyFamily::LazyFamily(std::string                                       name,
                         std::function<value_type(std::size_t)>            enumerate,
                         std::function<value_type(value_type, value_type)> op)
      : name_(std::move(name)),
        enumerate_(std::move(enumerate)),
        op_(std::move(op)) {}

  Truncation LazyFamily::truncate(std::size_t n) const {
    if (n == 0) {
      throw RangeError("truncation size must be positive");
    }
    std::vector<value_type>                      values;
    std::unordered_map<value_type, element_index> index;
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(enumerate(i));
      if (!index.emplace(values.back(), static_cast<element_index>(i)).second) {
        throw RangeError("enumerator of " + name_ + " is not injective");
      }
    }
    std::vector<element_index> table(n * n, Truncation::escapes);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(product(values[a], values[b]));
        if (it != index.end()) {
          table[a * n + b] = it->second;
        }
      }
    }
    return Truncation(std::move(values), std::move(table));
  }

  Truncation::Truncation(std::vector<value_type>    values,
                         std::vector<element_index> table)
      : values_(std::move(values)),
        table_(std::move(table)),
        escape_count_(
            std::count(table_.begin(), table_.end(), Truncation::escapes)) {}

  std::optional<element_index> Truncation::index_of(value_type v) const {
    auto it = std::find(values_.begin(), values_.end(), v);
    if (it == values_.end()) {
      return std::nullopt;
    }
    return static_cast<element_index>(it - values_.begin());
  }

  std::vector<std::pair<element_index, element_index>>
  Truncation::escaping_pairs() const {
    std::vector<std::pair<element_index, element_index>> result;
    auto const n = static_cast<element_index>(size());
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = 0; b < n; ++b) {
        if (product(a, b) == escapes) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  FiniteSemigroup Truncation::semigroup() const {
    if (!closed()) {
      auto [a, b] = escaping_pairs().front();
      throw EscapesTruncation(a,
                              "truncation is not closed: "
                                  + std::to_string(values_[a]) + "*"
                                  + std::to_string(values_[b])
                                  + " escapes");
    }
    std::vector<std::string>                labels;
    std::vector<std::vector<element_index>> table(size());
    for (std::size_t a = 0; a < size(); ++a) {
      labels.push_back(std::to_string(values_[a]));
      table[a].assign(table_.begin() + a * size(),
                      table_.begin() + (a + 1) * size());
    }
    return FiniteSemigroup(std::move(labels), table);
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  std::vector<element_index>
  closure_order(FiniteSemigroup const& S, std::span<element_index const> gens) {
    std::vector<char>          in(S.size(), 0);
    std::vector<element_index> order;
    for (auto g : gens) {
      if (g >= S.size()) {
        throw RangeError("generator " + std::to_string(g) + " out of range");
      }
      if (!in[g]) {
        in[g] = 1;
        order.push_back(g);
      }
    }
    // Every product of closure elements is x*g for a generator g or
    // already found, so right-multiplying by generators suffices.
    std::vector<element_index> const generators(order);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto g : generators) {
        auto const y = S.product(order[i], g);
        if (!in[y]) {
          in[y] = 1;
          order.push_back(y);
        }
      }
    }
    return order;
  }

  element_set closure(FiniteSemigroup const&         S,
                      std::span<element_index const> gens) {
    auto result = closure_order(S, gens);
    std::sort(result.begin(), result.end());
    return result;
  }

  element_set square(FiniteSemigroup const& S) {
    std::vector<char> in(S.size(), 0);
    for (element_index a = 0; a < S.size(); ++a) {
      for (auto x : S.row(a)) {
        in[x] = 1;
      }
    }
    element_set result;
    for (element_index x = 0; x < S.size(); ++x) {
      if (in[x]) {
        result.push_back(x);
      }
    }
    return result;
  }

  Orbit orbit(FiniteSemigroup const& S, element_index s) {
    if (s >= S.size()) {
      throw RangeError("element " + std::to_string(s) + " out of range");
    }
    return power_orbit(
        s, [&S](element_index a, element_index b) { return S.product(a, b); });
  }

  Orbit orbit(Truncation const& T, element_index s) {
    if (s >= T.size()) {
      throw RangeError("element " + std::to_string(s) + " out of range");
    }
    return power_orbit(s, [&T, s](element_index a, element_index b) {
      auto const x = T.product(a, b);
      if (x == Truncation::escapes) {
        throw EscapesTruncation(s,
                                "powers of " + std::to_string(T.value(s))
                                    + " leave the truncation");
      }
      return x;
    });
  }

  element_set idempotents(FiniteSemigroup const& S) {
    element_set result;
    for (element_index e = 0; e < S.size(); ++e) {
      if (S.product(e, e) == e) {
        result.push_back(e);
      }
    }
    return result;
  }

  SubgroupInfo maximal_subgroup(FiniteSemigroup const& S, element_index e) {
    if (e >= S.size() || S.product(e, e) != e) {
      throw NotIdempotent(e);
    }
    SubgroupInfo result{e, {}, true};
    for (element_index x = 0; x < S.size(); ++x) {
      if (S.product(x, e) != x || S.product(e, x) != x) {
        continue;
      }
      if (inverse(S, e, x)) {
        result.elements.push_back(x);
        result.exponent_le_2 = result.exponent_le_2 && S.product(x, x) == e;
      }
    }
    return result;
  }

  std::optional<element_index> inverse(FiniteSemigroup const& S,
                                       element_index          e,
                                       element_index          x) {
    for (element_index y = 0; y < S.size(); ++y) {
      if (S.product(x, y) == e && S.product(y, x) == e
          && S.product(y, e) == y && S.product(e, y) == y) {
        return y;
      }
    }
    return std::nullopt;
  }

  std::optional<element_index> group_identity(FiniteSemigroup const& S) {
    auto const E = idempotents(S);
    if (E.size() != 1) {
      return std::nullopt;
    }
    auto const e = E.front();
    for (element_index x = 0; x < S.size(); ++x) {
      if (S.product(x, e) != x || S.product(e, x) != x) {
        return std::nullopt;
      }
      auto const row = S.row(x);
      if (std::find(row.begin(), row.end(), e) == row.end()) {
        return std::nullopt;
      }
    }
    return e;
  }

  PeriodicReport is_periodic(LazyFamily const& fam, std::size_t bound) {
    using value_type = LazyFamily::value_type;
    for (std::size_t i = 0; i < bound; ++i) {
      auto const              s = fam.enumerate(i);
      std::vector<value_type> powers{s};
      bool                    cycled = false;
      for (std::size_t k = 1; k < bound && !cycled; ++k) {
        auto const next = fam.product(powers.back(), s);
        cycled = std::find(powers.begin(), powers.end(), next) != powers.end();
        powers.push_back(next);
      }
      if (!cycled) {
        return {Periodicity::unknown_at_bound, s};
      }
    }
    return {Periodicity::periodic, std::nullopt};
  }

  std::optional<std::pair<element_index, element_index>>
  synchronizing_check(FiniteSemigroup const& S) {
    for (element_index a = 0; a < S.size(); ++a) {
      for (element_index b = 0; b < S.size(); ++b) {
        auto const ab = S.product(a, b);
        if (ab != a && ab != b) {
          return std::make_pair(a, b);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<element_set>
  finitely_synchronizing_check(FiniteSemigroup const& S, std::size_t max_f) {
    std::vector<char> forced(S.size(), 0);
    for (element_index a = 0; a < S.size(); ++a) {
      for (element_index b = 0; b < S.size(); ++b) {
        auto const ab = S.product(a, b);
        if (ab != a && ab != b) {
          forced[ab] = 1;
        }
      }
    }
    element_set F;
    for (element_index x = 0; x < S.size(); ++x) {
      if (forced[x]) {
        F.push_back(x);
      }
    }
    if (F.size() > max_f) {
      return std::nullopt;
    }
    return F;
  }

  std::size_t count_trapped(LazyFamily const&                       fam,
                            std::span<LazyFamily::value_type const> tuple,
                            std::span<LazyFamily::value_type const> F,
                            std::size_t                             horizon) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < horizon; ++i) {
      auto const s = fam.enumerate(i);
      bool const trapped
          = std::all_of(tuple.begin(), tuple.end(), [&](auto a) {
              return std::find(F.begin(), F.end(), fam.product(a, s))
                     != F.end();
            });
      bad += trapped;
    }
    return bad;
  }

  MovingReport moving_evidence(LazyFamily const&                       fam,
                               std::span<LazyFamily::value_type const> A,
                               std::span<LazyFamily::value_type const> F,
                               std::size_t k, std::size_t horizon) {
    if (k == 0 || k > A.size()) {
      throw PrecondViolation("k must satisfy 1 <= k <= |A|");
    }
    MovingReport               report{{}, horizon + 1, 0};
    std::vector<std::size_t>   idx(k);
    for (std::size_t i = 0; i < k; ++i) {
      idx[i] = i;
    }
    std::vector<LazyFamily::value_type> tuple(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        tuple[i] = A[idx[i]];
      }
      ++report.tuples_examined;
      auto const bad = count_trapped(fam, tuple, F, horizon);
      if (bad < report.bad_count) {
        report.bad_count  = bad;
        report.best_tuple = tuple;
        if (bad == 0) {
          break;
        }
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == A.size() - k + (i - 1)) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
    return report;
  }

  BooleanBasis boolean_group_basis(FiniteSemigroup const& S,
                                   SubgroupInfo const&    G) {
    auto const e = G.idempotent;
    for (auto g : G.elements) {
      if (S.product(g, g) != e) {
        throw OrderViolation(g);
      }
    }
    BooleanBasis      result{{}, true};
    std::vector<char> in_span(S.size(), 0);
    element_set       span{e};
    in_span[e] = 1;
    for (auto g : G.elements) {
      if (in_span[g]) {
        continue;
      }
      result.basis.push_back(g);
      auto const old = span.size();
      for (std::size_t i = 0; i < old; ++i) {
        auto const x = S.product(span[i], g);
        if (!in_span[x]) {
          in_span[x] = 1;
          span.push_back(x);
        }
      }
    }
    for (auto a : G.elements) {
      for (auto b : G.elements) {
        if (S.product(a, b) != S.product(b, a)) {
          result.commutative = false;
        }
      }
    }
    return result;
  }

  BooleanBasis boolean_group_basis(FiniteSemigroup const& G) {
    auto const e = group_identity(G);
    if (!e) {
      throw NotAGroup("input is not a group");
    }
    return boolean_group_basis(G, maximal_subgroup(G, *e));
  }

}  // namespace hindman

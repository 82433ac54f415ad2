#include "hindman/fpsets.hpp"

#include <algorithm>  // for sort, unique, find
#include <bit>        // for bit_width
#include <numeric>    // for iota

#include "hindman/errors.hpp"
#include "hindman/families.hpp"
#include "hindman/parallel.hpp"

namespace hindman {

  namespace {

    void check_distinct(FiniteSemigroup const&         S,
                        std::span<element_index const> seq) {
      std::vector<char> seen(S.size(), 0);
      for (auto x : seq) {
        if (x >= S.size()) {
          throw RangeError("element " + std::to_string(x) + " out of range");
        }
        if (seen[x]++) {
          throw PrecondViolation("sequence elements must be distinct");
        }
      }
    }

    element_set sorted_unique(std::vector<element_index> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    void hat_words(FiniteSemigroup const&         S,
                   std::span<element_index const> seq,
                   Word&                          word,
                   std::vector<char>&             used,
                   element_index                  value,
                   FpFamily&                      out) {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (used[i]) {
          continue;
        }
        used[i] = 1;
        word.push_back(static_cast<std::uint8_t>(i));
        auto const v = word.size() == 1 ? seq[i] : S.product(value, seq[i]);
        out.words.push_back(word);
        out.values.push_back(v);
        hat_words(S, seq, word, used, v, out);
        word.pop_back();
        used[i] = 0;
      }
    }

    // Search state for search_fp_mod_finite: the multiset of FP word values
    // of the current prefix and per-color counts of distinct values.
    class FpSearch {
     public:
      FpSearch(FiniteSemigroup const& S, Coloring const& c, std::size_t n,
               std::size_t budget)
          : S_(S),
            c_(c),
            n_(n),
            budget_(budget),
            multiplicity_(S.size(), 0),
            distinct_by_color_(c.palette_size(), 0),
            in_prefix_(S.size(), 0) {}

      std::optional<FpWitness> run_from(element_index first) {
        push(first);
        auto result = dfs();
        pop();
        return result;
      }

     private:
      void add_value(element_index v) {
        if (multiplicity_[v]++ == 0) {
          ++distinct_by_color_[c_(v)];
          ++distinct_;
        }
      }

      void remove_value(element_index v) {
        if (--multiplicity_[v] == 0) {
          --distinct_by_color_[c_(v)];
          --distinct_;
        }
      }

      // Appends x: new words are {x} and w.x for every existing word w.
      void push(element_index x) {
        auto const old = values_.size();
        marks_.push_back(old);
        prefix_.push_back(x);
        in_prefix_[x] = 1;
        for (std::size_t i = 0; i < old; ++i) {
          values_.push_back(S_.product(values_[i], x));
          add_value(values_.back());
        }
        values_.push_back(x);
        add_value(x);
      }

      void pop() {
        auto const mark = marks_.back();
        marks_.pop_back();
        while (values_.size() > mark) {
          remove_value(values_.back());
          values_.pop_back();
        }
        in_prefix_[prefix_.back()] = 0;
        prefix_.pop_back();
      }

      // Least exception count over colors (ties to the lowest color).
      std::pair<color_index, std::size_t> best_color() const {
        color_index best = 0;
        for (color_index r = 1; r < distinct_by_color_.size(); ++r) {
          if (distinct_by_color_[r] > distinct_by_color_[best]) {
            best = r;
          }
        }
        return {best, distinct_ - distinct_by_color_[best]};
      }

      std::optional<FpWitness> dfs() {
        auto const [color, exceptions] = best_color();
        // Exceptions only grow as the prefix grows.
        if (exceptions > budget_) {
          return std::nullopt;
        }
        if (prefix_.size() == n_) {
          FpWitness w{prefix_, color, {}};
          for (element_index v = 0; v < S_.size(); ++v) {
            if (multiplicity_[v] > 0 && c_(v) != color) {
              w.exceptions.push_back(v);
            }
          }
          return w;
        }
        for (element_index x = 0; x < S_.size(); ++x) {
          if (in_prefix_[x]) {
            continue;
          }
          push(x);
          auto result = dfs();
          pop();
          if (result) {
            return result;
          }
        }
        return std::nullopt;
      }

      FiniteSemigroup const&     S_;
      Coloring const&            c_;
      std::size_t                n_, budget_;
      std::vector<std::size_t>   multiplicity_;
      std::vector<std::size_t>   distinct_by_color_;
      std::size_t                distinct_ = 0;
      std::vector<char>          in_prefix_;
      std::vector<element_index> prefix_;
      std::vector<element_index> values_;
      std::vector<std::size_t>   marks_;
    };

    // V[mask] = set of values of duplicate-free words using exactly the
    // sequence positions in mask, for masks over the first k positions.
    class HatTable {
     public:
      explicit HatTable(FiniteSemigroup const& S) : S_(S), sets_{{}} {}

      void append(element_index x) {
        auto const k    = positions_.size();
        auto const half = sets_.size();
        positions_.push_back(x);
        sets_.resize(2 * half);
        for (std::size_t mask = half; mask < 2 * half; ++mask) {
          std::vector<element_index> values;
          if (mask == half) {
            values.push_back(x);
          }
          // Last factor i ranges over the positions in mask.
          for (std::size_t i = 0; i <= k; ++i) {
            auto const bit = std::size_t(1) << i;
            if (!(mask & bit) || mask == bit) {
              continue;
            }
            for (auto v : sets_[mask ^ bit]) {
              values.push_back(S_.product(v, positions_[i]));
            }
          }
          sets_[mask] = sorted_unique(std::move(values));
        }
      }

      element_set all_values() const {
        std::vector<element_index> out;
        for (auto const& s : sets_) {
          out.insert(out.end(), s.begin(), s.end());
        }
        return sorted_unique(std::move(out));
      }

      std::size_t size() const {
        return positions_.size();
      }

     private:
      FiniteSemigroup const&     S_;
      std::vector<element_set>   sets_;
      std::vector<element_index> positions_;
    };

  }  // namespace

  std::uint64_t fp_word_count(std::size_t n) {
    return (std::uint64_t(1) << n) - 1;
  }

  std::uint64_t fphat_word_count(std::size_t n) {
    std::uint64_t total = 0, term = 1;
    for (std::size_t m = 1; m <= n; ++m) {
      term *= n - m + 1;  // n!/(n-m)!
      total += term;
    }
    return total;
  }

  FpFamily fp(FiniteSemigroup const&         S,
              std::span<element_index const> seq,
              std::size_t                    cap) {
    check_distinct(S, seq);
    if (seq.size() > cap || seq.size() > fp_cap) {
      throw CapExceeded(seq.size(), std::min(cap, fp_cap));
    }
    FpFamily out{{seq.begin(), seq.end()}, false, {}, {}, {}};
    auto const n = seq.size();
    // Increasing words in lexicographic order: extend the current word by
    // every later position.
    struct Frame {
      Word          word;
      element_index value;
    };
    std::vector<Frame> stack;
    for (std::size_t i = n; i-- > 0;) {
      stack.push_back({Word{static_cast<std::uint8_t>(i)}, seq[i]});
    }
    while (!stack.empty()) {
      auto frame = std::move(stack.back());
      stack.pop_back();
      out.words.push_back(frame.word);
      out.values.push_back(frame.value);
      for (std::size_t j = n; j-- > std::size_t(frame.word.back()) + 1;) {
        auto w = frame.word;
        w.push_back(static_cast<std::uint8_t>(j));
        stack.push_back({std::move(w), S.product(frame.value, seq[j])});
      }
    }
    out.value_set = sorted_unique(out.values);
    return out;
  }

  FpFamily fphat(FiniteSemigroup const&         S,
                 std::span<element_index const> seq,
                 std::size_t                    cap) {
    check_distinct(S, seq);
    if (seq.size() > cap || seq.size() > fphat_cap) {
      throw CapExceeded(seq.size(), std::min(cap, fphat_cap));
    }
    FpFamily          out{{seq.begin(), seq.end()}, true, {}, {}, {}};
    Word              word;
    std::vector<char> used(seq.size(), 0);
    hat_words(S, seq, word, used, 0, out);
    out.value_set = sorted_unique(out.values);
    return out;
  }

  element_set fp_values(FiniteSemigroup const&         S,
                        std::span<element_index const> seq) {
    check_distinct(S, seq);
    if (seq.size() > fp_cap) {
      throw CapExceeded(seq.size(), fp_cap);
    }
    // value[mask] = value[mask minus its top bit] * a_top.
    std::vector<element_index> value(std::size_t(1) << seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto const bit = std::size_t(1) << i;
      value[bit]     = seq[i];
      for (std::size_t mask = 1; mask < bit; ++mask) {
        value[mask | bit] = S.product(value[mask], seq[i]);
      }
    }
    value.erase(value.begin());
    return sorted_unique(std::move(value));
  }

  element_set fphat_values(FiniteSemigroup const&         S,
                           std::span<element_index const> seq) {
    check_distinct(S, seq);
    if (seq.size() > refine_cap) {
      throw CapExceeded(seq.size(), refine_cap);
    }
    HatTable table(S);
    for (auto x : seq) {
      table.append(x);
    }
    return table.all_values();
  }

  std::optional<FpWitness> search_fp_mod_finite(FiniteSemigroup const& S,
                                                Coloring const&        c,
                                                std::size_t            n,
                                                std::size_t budget) {
    if (c.size() != S.size()) {
      throw PrecondViolation("coloring does not match the semigroup");
    }
    if (n == 0) {
      throw PrecondViolation("n must be positive");
    }
    if (n > fp_cap) {
      throw CapExceeded(n, fp_cap);
    }
    if (n > S.size()) {
      return std::nullopt;
    }
    return detail::least_success<FpWitness>(S.size(), [&](std::size_t first) {
      FpSearch search(S, c, n, budget);
      return search.run_from(static_cast<element_index>(first));
    });
  }

  std::optional<MonoSubsemigroup>
  search_mono_subsemigroup(FiniteSemigroup const&         S,
                           Coloring const&                c,
                           std::size_t                    budget,
                           std::size_t                    max_gens,
                           std::span<element_index const> universe) {
    if (c.size() != S.size()) {
      throw PrecondViolation("coloring does not match the semigroup");
    }
    std::vector<element_index> pool(universe.begin(), universe.end());
    if (pool.empty()) {
      pool.resize(S.size());
      std::iota(pool.begin(), pool.end(), 0);
    }
    pool = sorted_unique(std::move(pool));

    std::optional<MonoSubsemigroup> best;
    std::vector<element_index>      gens;
    auto consider = [&] {
      auto elements = closure(S, gens);
      if (best
          && (elements.size() < best->elements.size()
              || (elements.size() == best->elements.size()
                  && elements >= best->elements))) {
        return;
      }
      auto verdict = mono_check(elements, c);
      if (verdict.exceptions.size() <= budget) {
        best = MonoSubsemigroup{gens, std::move(elements), std::move(verdict)};
      }
    };
    // All generator sets of size 1..max_gens as increasing index tuples.
    auto recurse = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t i = from; i < pool.size(); ++i) {
        gens.push_back(pool[i]);
        consider();
        if (gens.size() < max_gens) {
          self(self, i + 1);
        }
        gens.pop_back();
      }
    };
    if (max_gens > 0) {
      recurse(recurse, 0);
    }
    return best;
  }

  Refinement refine_fphat(FiniteSemigroup const&         S,
                          Coloring const&                c,
                          std::span<element_index const> seq,
                          std::span<element_index const> F,
                          std::size_t                    min_length) {
    auto const identity = group_identity(S);
    if (!identity) {
      throw NotAGroup("refine_fphat needs a group");
    }
    if (c.size() != S.size()) {
      throw PrecondViolation("coloring does not match the semigroup");
    }
    check_distinct(S, seq);
    auto const e = *identity;

    std::vector<element_index> inv(S.size());
    for (element_index x = 0; x < S.size(); ++x) {
      inv[x] = *inverse(S, e, x);
    }

    Refinement result;
    HatTable   table(S);
    element_set P{e};
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
      // Forbidden: p^-1 f q^-1 for p, q in P and f in F.
      std::vector<char> forbidden(S.size(), 0);
      for (auto p : P) {
        for (auto f : F) {
          auto const pf = S.product(inv[p], f);
          for (auto q : P) {
            forbidden[S.product(pf, inv[q])] = 1;
          }
        }
      }
      auto const a = seq[pos];
      if (forbidden[a]) {
        continue;
      }
      if (table.size() == refine_cap) {
        throw CapExceeded(table.size() + 1, refine_cap);
      }
      result.positions.push_back(pos);
      result.subsequence.push_back(a);
      table.append(a);
      P = table.all_values();
      P.insert(std::lower_bound(P.begin(), P.end(), e), e);
      P = sorted_unique(std::move(P));
    }
    if (result.subsequence.size() < min_length) {
      throw StuckAt(result.subsequence.size() + 1);
    }
    result.fphat_values = table.all_values();
    result.verdict      = mono_check(result.fphat_values, c);
    return result;
  }

  WhyModFinReport verify_why_mod_fin(std::size_t k, std::size_t M) {
    if (k > fp_cap || k > M) {
      throw PrecondViolation("whymodfin check needs k <= min(M, 20)");
    }
    auto const S = why_mod_fin(k, M);
    auto const c = mod_coloring(S, k);

    WhyModFinReport report{k, M};
    std::vector<std::size_t>   pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<element_index> value(std::size_t(1) << k);
    std::vector<char>          hit(k);
    while (true) {
      // value[mask] = product over mask in increasing position order
      for (std::size_t mask = 1; mask < value.size(); ++mask) {
        auto const top = std::size_t(std::bit_width(mask) - 1);
        auto const x   = static_cast<element_index>(k + pick[top]);
        auto const rest = mask ^ (std::size_t(1) << top);
        value[mask]     = rest ? S.product(value[rest], x) : x;
      }
      std::fill(hit.begin(), hit.end(), 0);
      for (std::size_t mask = 1; mask < value.size(); ++mask) {
        hit[c(value[mask])] = 1;
      }
      ++report.subsets_checked;
      if (std::count(hit.begin(), hit.end(), 1) != std::ptrdiff_t(k)) {
        std::vector<std::int64_t> values;
        for (auto j : pick) {
          values.push_back(std::int64_t(k * (j + 1) + 1));
        }
        report.failure = std::move(values);
        for (color_index r = 0; r < k; ++r) {
          if (!hit[r]) {
            report.missing.push_back(r);
          }
        }
        return report;
      }
      // next k-combination of 0..M-1
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == M - k + i - 1) {
        --i;
      }
      if (i == 0) {
        return report;
      }
      ++pick[i - 1];
      for (auto j = i; j < k; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }

}  // namespace hindman

#include "hindman/shevrin.hpp"

#include <algorithm>  // for sort, find, all_of
#include <functional>  // for function
#include <map>        // for map
#include <numeric>    // for iota

#include "hindman/errors.hpp"
#include "hindman/fpsets.hpp"
#include "hindman/parallel.hpp"

namespace hindman {

  ////////////////////////////////////////////////////////////////////////
  // Ramsey search
  ////////////////////////////////////////////////////////////////////////

  EdgeColoring::EdgeColoring(std::size_t vertices, std::uint32_t fill)
      : v_(vertices), colors_(vertices * (vertices - (vertices > 0)) / 2, fill) {}

  std::size_t EdgeColoring::slot(std::size_t i, std::size_t j) const {
    if (i == j || i >= v_ || j >= v_) {
      throw RangeError("no edge between " + std::to_string(i) + " and "
                       + std::to_string(j));
    }
    if (i > j) {
      std::swap(i, j);
    }
    // Row i holds the v-1-i edges (i, i+1), ..., (i, v-1).
    return i * (2 * v_ - i - 1) / 2 + (j - i - 1);
  }

  namespace {

    class CliqueSearch {
     public:
      CliqueSearch(EdgeColoring const& edges, std::size_t target)
          : edges_(edges), target_(target) {}

      std::optional<std::vector<std::size_t>> from(std::size_t first) {
        chosen_.assign(1, first);
        std::vector<std::size_t> cands;
        for (std::size_t u = first + 1; u < edges_.vertices(); ++u) {
          cands.push_back(u);
        }
        if (extend(std::nullopt, cands)) {
          return chosen_;
        }
        return std::nullopt;
      }

     private:
      // Every vertex in cands is joined to every chosen vertex in `color`.
      bool extend(std::optional<std::uint32_t>    color,
                  std::vector<std::size_t> const& cands) {
        if (chosen_.size() >= target_) {
          return true;
        }
        for (std::size_t idx = 0; idx < cands.size(); ++idx) {
          if (chosen_.size() + (cands.size() - idx) < target_) {
            return false;
          }
          auto const u = cands[idx];
          auto const c = color ? *color : edges_.color(chosen_.front(), u);
          std::vector<std::size_t> next;
          for (std::size_t k = idx + 1; k < cands.size(); ++k) {
            auto const w = cands[k];
            if (edges_.color(u, w) == c
                && (color || edges_.color(chosen_.front(), w) == c)) {
              next.push_back(w);
            }
          }
          chosen_.push_back(u);
          if (extend(c, next)) {
            return true;
          }
          chosen_.pop_back();
        }
        return false;
      }

      EdgeColoring const&      edges_;
      std::size_t              target_;
      std::vector<std::size_t> chosen_;
    };

  }  // namespace

  std::optional<std::vector<std::size_t>> ramsey_find(EdgeColoring const& edges,
                                                      std::size_t target) {
    if (target > edges.vertices()) {
      return std::nullopt;
    }
    if (target <= 1) {
      return std::vector<std::size_t>(target, 0);
    }
    return detail::least_success<std::vector<std::size_t>>(
        edges.vertices() - target + 1, [&](std::size_t first) {
          return CliqueSearch(edges, target).from(first);
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Pair coloring and extraction
  ////////////////////////////////////////////////////////////////////////

  std::vector<element_index> non_products(FiniteSemigroup const& S) {
    auto const                 s2 = square(S);
    std::vector<element_index> out;
    for (element_index x = 0; x < S.size(); ++x) {
      if (!std::binary_search(s2.begin(), s2.end(), x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  PairColoring shevrin_pair_coloring(FiniteSemigroup const&         S,
                                     std::span<element_index const> seq) {
    auto const        s2 = square(S);
    std::vector<char> seen(S.size(), 0);
    for (auto x : seq) {
      if (x >= S.size()) {
        throw RangeError("element " + std::to_string(x) + " out of range");
      }
      if (seen[x]++) {
        throw PrecondViolation("sequence elements must be distinct");
      }
      if (std::binary_search(s2.begin(), s2.end(), x)) {
        throw NotOutsideS2(x);
      }
    }
    PairColoring                      out{EdgeColoring(seq.size()), {}};
    std::map<PairColor, std::uint32_t> ids;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto const a = seq[i];
      auto const a2 = S.product(a, a);
      auto const a3 = S.product(a2, a);
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        auto const      b = seq[j];
        PairColor const tuple{a3, a2, S.product(a, b), S.product(b, a)};
        auto [it, inserted]
            = ids.emplace(tuple, static_cast<std::uint32_t>(out.palette.size()));
        if (inserted) {
          out.palette.push_back(tuple);
        }
        out.edges.set(i, j, it->second);
      }
    }
    return out;
  }

  TypeHDCertificate extract_typehd(FiniteSemigroup const&         S,
                                   std::span<element_index const> seq,
                                   std::size_t                    target) {
    if (target < 2) {
      throw PrecondViolation("target must be at least 2");
    }
    auto const pairs  = shevrin_pair_coloring(S, seq);
    auto const clique = ramsey_find(pairs.edges, target);
    if (!clique) {
      throw RamseyFail(target);
    }

    TypeHDCertificate cert;
    cert.source.assign(seq.begin(), seq.end());
    cert.prefix_length = seq.size();
    cert.positions     = *clique;
    for (auto p : cert.positions) {
      cert.subsequence.push_back(seq[p]);
    }
    cert.color
        = pairs.palette[pairs.edges.color(cert.positions[0], cert.positions[1])];

    auto const& bs = cert.subsequence;
    auto const  b  = bs[0];
    auto const  o  = orbit(S, b);
    cert.h         = o.index_h;
    cert.d         = o.period_d;
    cert.relations = verify_hd(S, bs, cert.h, cert.d);

    auto const sq   = S.product(b, b);
    auto const cube = S.product(sq, b);
    auto const ab   = S.product(bs[0], bs[1]);
    auto const ba   = S.product(bs[1], bs[0]);

    cert.pair_identities = true;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      auto const bi2 = S.product(bs[i], bs[i]);
      cert.pair_identities &= bi2 == sq && S.product(bi2, bs[i]) == cube;
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        cert.pair_identities &= S.product(bs[i], bs[j]) == ab
                                && S.product(bs[j], bs[i]) == ba;
      }
    }

    cert.hd3_cases = {true, true, true};
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = 0; j < bs.size(); ++j) {
        auto const which = i < j ? 0 : (i > j ? 1 : 2);
        auto const bij   = S.product(bs[i], bs[j]);
        for (auto bk : bs) {
          cert.hd3_cases[which] &= S.product(bij, bk) == cube;
        }
      }
    }

    std::vector<element_index> predicted(bs.begin(), bs.end());
    predicted.insert(predicted.end(), {sq, ab, ba});
    for (std::size_t p = 3; p + 1 <= cert.h + cert.d; ++p) {
      predicted.push_back(S.power(b, p));
    }
    std::sort(predicted.begin(), predicted.end());
    predicted.erase(std::unique(predicted.begin(), predicted.end()),
                    predicted.end());
    cert.structure_set     = std::move(predicted);
    cert.closure_set       = closure(S, bs);
    cert.structure_matches = cert.structure_set == cert.closure_set;

    element_set E;
    for (auto x : cert.closure_set) {
      if (S.product(x, x) == x) {
        E.push_back(x);
      }
    }
    cert.unique_idempotent = E.size() == 1;
    cert.idempotent        = E.empty() ? 0 : E.front();

    auto const be  = S.product(b, cert.idempotent);
    auto const be2 = S.product(be, be);
    auto&      a   = cert.audit;
    a.sq           = sq;
    a.ab           = ab;
    a.ba           = ba;
    a.be2          = be2;
    a.ab_eq_ba     = ab == ba;
    a.ab_eq_sq     = ab == sq;
    a.ab_eq_be2    = ab == be2;
    a.ba_eq_sq     = ba == sq;
    a.ba_eq_be2    = ba == be2;
    a.sq_eq_be2    = sq == be2;
    for (std::size_t n = 2; n + 1 <= cert.h + cert.d; ++n) {
      auto const bn = S.power(b, n);
      if (bn == ab && !a.ab_power) {
        a.ab_power = n;
      }
      if (bn == ba && !a.ba_power) {
        a.ba_power = n;
      }
    }
    a.ab_biconditional = a.ab_power.has_value() == (a.ab_eq_sq || a.ab_eq_be2);
    a.ba_biconditional = a.ba_power.has_value() == (a.ba_eq_sq || a.ba_eq_be2);
    return cert;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pattern classification
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Branch and bound maximum clique over `vertices`; stops early once a
    // clique of size `bound` is found. Ties go to the first found in
    // lexicographic DFS order.
    std::vector<element_index>
    max_clique(std::vector<element_index> const&                     vertices,
               std::function<bool(element_index, element_index)> const& adj,
               std::size_t                                           bound) {
      std::vector<element_index> best, current;
      auto rec = [&](auto&& self, std::vector<element_index> const& cands) -> void {
        if (current.size() > best.size()) {
          best = current;
        }
        if (best.size() >= bound) {
          return;
        }
        for (std::size_t i = 0; i < cands.size(); ++i) {
          if (current.size() + (cands.size() - i) <= best.size()
              || best.size() >= bound) {
            return;
          }
          std::vector<element_index> next;
          for (std::size_t k = i + 1; k < cands.size(); ++k) {
            if (adj(cands[i], cands[k])) {
              next.push_back(cands[k]);
            }
          }
          current.push_back(cands[i]);
          self(self, next);
          current.pop_back();
        }
      };
      rec(rec, vertices);
      if (best.size() > bound) {
        best.resize(bound);
      }
      return best;
    }

  }  // namespace

  PatternReport classify_patterns(FiniteSemigroup const& S, std::size_t bound) {
    PatternReport report;
    auto const    E = idempotents(S);
    auto const    p = [&S](element_index a, element_index b) {
      return S.product(a, b);
    };

    report.right_zero.witness = max_clique(
        E, [&](auto a, auto b) { return p(a, b) == b && p(b, a) == a; }, bound);
    report.right_zero.size = report.right_zero.witness.size();

    report.left_zero.witness = max_clique(
        E, [&](auto a, auto b) { return p(a, b) == a && p(b, a) == b; }, bound);
    report.left_zero.size = report.left_zero.witness.size();

    // Natural order on idempotents: a <= b iff ab = ba = a. Longest chain by
    // memoized DFS over the strict order.
    {
      auto const                 k = E.size();
      std::vector<std::size_t>   longest(k, 0);
      std::vector<std::size_t>   below(k, k);
      auto less = [&](std::size_t i, std::size_t j) {
        return i != j && p(E[i], E[j]) == E[i] && p(E[j], E[i]) == E[i];
      };
      std::function<std::size_t(std::size_t)> chain = [&](std::size_t j) {
        if (longest[j] != 0) {
          return longest[j];
        }
        std::size_t best = 1;
        for (std::size_t i = 0; i < k; ++i) {
          if (less(i, j) && chain(i) + 1 > best) {
            best     = longest[i] + 1;
            below[j] = i;
          }
        }
        return longest[j] = best;
      };
      std::size_t top = k;
      for (std::size_t j = 0; j < k; ++j) {
        auto const len = chain(j);
        if (top == k || len > longest[top]) {
          top = j;
        }
      }
      std::vector<element_index> ascending;
      for (auto j = top; j != k; j = below[j]) {
        ascending.push_back(E[j]);
      }
      std::reverse(ascending.begin(), ascending.end());
      if (ascending.size() > bound) {
        ascending.resize(bound);
      }
      report.min_chain.witness = ascending;
      report.min_chain.size    = ascending.size();
      report.max_chain.witness.assign(ascending.rbegin(), ascending.rend());
      report.max_chain.size = ascending.size();
    }

    for (auto z : E) {
      std::vector<element_index> above;
      for (auto y : E) {
        if (y != z && p(y, z) == z && p(z, y) == z) {
          above.push_back(y);
        }
      }
      auto clique = max_clique(
          above,
          [&](auto a, auto b) { return p(a, b) == z && p(b, a) == z; },
          bound == 0 ? 0 : bound - 1);
      if (clique.size() + 1 > report.fan.size && bound > 0) {
        report.fan.witness = {z};
        report.fan.witness.insert(report.fan.witness.end(), clique.begin(),
                                  clique.end());
        report.fan.size = report.fan.witness.size();
      }
    }

    for (auto e : E) {
      auto G = maximal_subgroup(S, e);
      if (G.elements.size() > report.subgroup.size) {
        report.subgroup.witness = {e};
        for (auto x : G.elements) {
          if (x != e) {
            report.subgroup.witness.push_back(x);
          }
        }
        report.subgroup.size = G.elements.size();
      }
    }

    report.square_size = square(S).size();
    return report;
  }

  bool is_right_zero(FiniteSemigroup const& S, std::span<element_index const> X) {
    return std::all_of(X.begin(), X.end(), [&](auto a) {
      return std::all_of(
          X.begin(), X.end(), [&](auto b) { return S.product(a, b) == b; });
    });
  }

  bool is_left_zero(FiniteSemigroup const& S, std::span<element_index const> X) {
    return std::all_of(X.begin(), X.end(), [&](auto a) {
      return std::all_of(
          X.begin(), X.end(), [&](auto b) { return S.product(a, b) == a; });
    });
  }

  namespace {
    bool is_chain(FiniteSemigroup const&         S,
                  std::span<element_index const> X,
                  bool                           product_is_later) {
      for (std::size_t i = 0; i < X.size(); ++i) {
        if (S.product(X[i], X[i]) != X[i]) {
          return false;
        }
        for (std::size_t j = i + 1; j < X.size(); ++j) {
          auto const want = product_is_later ? X[j] : X[i];
          if (X[i] == X[j] || S.product(X[i], X[j]) != want
              || S.product(X[j], X[i]) != want) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_max_chain(FiniteSemigroup const& S, std::span<element_index const> X) {
    return is_chain(S, X, true);
  }

  bool is_min_chain(FiniteSemigroup const& S, std::span<element_index const> X) {
    return is_chain(S, X, false);
  }

  bool is_fan(FiniteSemigroup const& S, std::span<element_index const> X) {
    if (X.empty()) {
      return true;
    }
    auto const z = X[0];
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (S.product(X[i], X[i]) != X[i]) {
        return false;
      }
      for (std::size_t j = 0; j < X.size(); ++j) {
        if (i != j && (X[i] == X[j] || S.product(X[i], X[j]) != z)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_subgroup(FiniteSemigroup const& S, std::span<element_index const> X) {
    if (X.empty()) {
      return false;
    }
    auto const e  = X[0];
    auto const in = [&](element_index y) {
      return std::find(X.begin(), X.end(), y) != X.end();
    };
    for (auto x : X) {
      if (S.product(x, e) != x || S.product(e, x) != x) {
        return false;
      }
      bool has_inverse = false;
      for (auto y : X) {
        if (!in(S.product(x, y))) {
          return false;
        }
        has_inverse |= S.product(x, y) == e && S.product(y, x) == e;
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Almost-monochromatic subsemigroups from the two sufficient conditions
  ////////////////////////////////////////////////////////////////////////

  element_set largest_boolean_subgroup(FiniteSemigroup const& S) {
    element_set best;
    for (auto e : idempotents(S)) {
      auto const G = maximal_subgroup(S, e);
      element_set K{e};
      for (auto x : G.elements) {
        if (S.product(x, x) != e || std::binary_search(K.begin(), K.end(), x)) {
          continue;
        }
        auto gens = K;
        gens.push_back(x);
        auto next = closure(S, gens);
        if (std::all_of(next.begin(), next.end(),
                        [&](auto y) { return S.product(y, y) == e; })) {
          K = std::move(next);
        }
      }
      if (K.size() > best.size()) {
        best = std::move(K);
      }
    }
    return best;
  }

  Thm35Report verify_thm35_direction3to1(FiniteSemigroup const& S,
                                         Coloring const&        c,
                                         Thm35Case              which) {
    if (c.size() != S.size()) {
      throw PrecondViolation("coloring does not match the semigroup");
    }
    Thm35Report report{which, {}, {}, 0, {}, {}, {true, 0, {}}, false};
    if (which == Thm35Case::finsync) {
      auto const F = *finitely_synchronizing_check(S, S.size());
      if (F.size() == S.size()) {
        throw CaseInapplicable(
            "every element is a forced exception; S is not finitely "
            "synchronizing in any useful sense");
      }
      report.exception_set = F;
      report.ambient.resize(S.size());
      std::iota(report.ambient.begin(), report.ambient.end(), 0);
      auto const majority = mono_check(report.ambient, c).majority_color;
      for (auto x : report.ambient) {
        if (c(x) == majority) {
          report.generators.push_back(x);
        }
      }
      report.subsemigroup = closure(S, report.generators);
      report.verdict      = mono_check(report.subsemigroup, c);
      auto within         = [&](element_set const& X, element_set const& Y) {
        return std::includes(Y.begin(), Y.end(), X.begin(), X.end());
      };
      element_set class_and_f = report.generators;
      class_and_f.insert(class_and_f.end(), F.begin(), F.end());
      std::sort(class_and_f.begin(), class_and_f.end());
      class_and_f.erase(std::unique(class_and_f.begin(), class_and_f.end()),
                        class_and_f.end());
      report.pass = within(report.subsemigroup, class_and_f)
                    && within(report.verdict.exceptions, F);
      return report;
    }

    auto const K = largest_boolean_subgroup(S);
    std::size_t rank = 0;
    while ((std::size_t(1) << rank) < K.size()) {
      ++rank;
    }
    if (rank < 2) {
      throw CaseInapplicable("no Z2-sum subgroup of rank >= 2");
    }
    report.ambient = K;
    report.rank    = rank;
    // Give the identity a color of its own: with budget 1 the only allowed
    // exception is then the identity.
    element_index identity = K.front();
    for (auto x : K) {
      if (S.product(x, x) == x) {
        identity = x;
      }
    }
    auto assign      = c.assignment();
    assign[identity] = static_cast<color_index>(c.palette_size());
    Coloring const marked(std::move(assign), c.palette_size() + 1);
    auto const     found = search_mono_subsemigroup(S, marked, 1, 3, K);
    if (found) {
      report.generators   = found->generators;
      report.subsemigroup = found->elements;
      report.verdict      = mono_check(report.subsemigroup, c);
      std::vector<element_index> rest;
      for (auto x : report.subsemigroup) {
        if (x != identity) {
          rest.push_back(x);
        }
      }
      report.pass = report.subsemigroup.size() >= 2 && mono_check(rest, c).is_mono;
    }
    return report;
  }

}  // namespace hindman

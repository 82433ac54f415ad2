// Randomized invariant checks. Random semigroups are transformation
// semigroups (closures of random self-maps under composition), which are
// associative by construction.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"

#include "hindman/cayley_io.hpp"
#include "hindman/errors.hpp"
#include "hindman/families.hpp"
#include "hindman/fpsets.hpp"
#include "hindman/shevrin.hpp"

using namespace hindman;

namespace {
  using Map = std::vector<std::uint8_t>;

  // f then g.
  Map compose(Map const& f, Map const& g) {
    Map h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      h[i] = g[f[i]];
    }
    return h;
  }

  FiniteSemigroup random_transformation_semigroup(std::mt19937& rng,
                                                  std::size_t   degree,
                                                  std::size_t   gens,
                                                  std::size_t   limit = 80) {
    while (true) {
      std::vector<Map> elems;
      std::map<Map, std::size_t> index;
      for (std::size_t g = 0; g < gens; ++g) {
        Map f(degree);
        for (auto& x : f) {
          x = std::uint8_t(rng() % degree);
        }
        if (index.emplace(f, elems.size()).second) {
          elems.push_back(f);
        }
      }
      for (std::size_t i = 0; i < elems.size() && elems.size() <= limit; ++i) {
        for (std::size_t j = 0; j <= i && elems.size() <= limit; ++j) {
          for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
            auto h = compose(elems[a], elems[b]);
            if (index.emplace(h, elems.size()).second) {
              elems.push_back(h);
            }
          }
        }
      }
      if (elems.size() > limit) {
        continue;
      }
      auto const n = elems.size();
      std::vector<std::vector<element_index>> t(n, std::vector<element_index>(n));
      std::vector<std::string>                labels;
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("t" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = element_index(index.at(compose(elems[a], elems[b])));
        }
      }
      return build_cayley(labels, t);
    }
  }

  Coloring random_coloring(std::mt19937& rng, std::size_t n, std::size_t p) {
    std::vector<color_index> a(n);
    for (auto& x : a) {
      x = color_index(rng() % p);
    }
    return Coloring(a, p);
  }

  // GF(2) rank of bit vectors by Gaussian elimination.
  std::size_t gf2_rank(std::vector<unsigned> rows) {
    std::size_t rank = 0;
    for (unsigned bit = 0; bit < 32; ++bit) {
      auto pivot = std::find_if(rows.begin() + long(rank), rows.end(),
                                [bit](unsigned r) { return r >> bit & 1; });
      if (pivot == rows.end()) {
        continue;
      }
      std::iter_swap(rows.begin() + long(rank), pivot);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != rank && (rows[i] >> bit & 1)) {
          rows[i] ^= rows[rank];
        }
      }
      ++rank;
    }
    return rank;
  }

  constexpr int rounds = 40;
}  // namespace

TEST_CASE("random semigroups: io, closure, orbits, idempotents") {
  std::mt19937 rng(101);
  for (int r = 0; r < rounds; ++r) {
    auto const S = random_transformation_semigroup(rng, 3 + r % 2, 2);
    std::istringstream is(to_cayley(S));
    CHECK(read_cayley(is) == S);

    for (element_index s = 0; s < S.size(); ++s) {
      auto const o = orbit(S, s);
      auto const h = o.index_h, d = o.period_d;
      CHECK(S.power(s, h) == S.power(s, h + d));
      for (std::size_t hh = 1; hh <= h; ++hh) {
        for (std::size_t dd = 1; dd <= d; ++dd) {
          if (hh < h || dd < d) {
            CHECK(S.power(s, hh) != S.power(s, hh + dd));
          }
        }
      }
      std::size_t idem = 0;
      for (auto g : o.group_part) {
        idem += S.product(g, g) == g;
      }
      CHECK(idem == 1);
      CHECK(closure(S, std::vector{s}).size() == h + d - 1);
    }

    auto const E = idempotents(S);
    CHECK(!E.empty());
    for (auto e : E) {
      auto const G = maximal_subgroup(S, e);
      std::vector<element_index> w = {e};
      for (auto x : G.elements) {
        if (x != e) {
          w.push_back(x);
        }
      }
      CHECK(is_subgroup(S, w));
      bool le2 = true;
      for (auto x : G.elements) {
        le2 &= S.product(x, x) == e;
      }
      CHECK(G.exponent_le_2 == le2);
    }

    auto const sync = synchronizing_check(S);
    std::optional<std::pair<element_index, element_index>> brute;
    for (element_index a = 0; a < S.size() && !brute; ++a) {
      for (element_index b = 0; b < S.size() && !brute; ++b) {
        auto const ab = S.product(a, b);
        if (ab != a && ab != b) {
          brute = std::pair{a, b};
        }
      }
    }
    CHECK(sync == brute);
  }
}

TEST_CASE("random semigroups: pattern witnesses and chains") {
  std::mt19937 rng(202);
  for (int r = 0; r < rounds; ++r) {
    auto const S = random_transformation_semigroup(rng, 3, 2 + r % 2, 20);
    auto const p = classify_patterns(S, 32);
    CHECK(is_right_zero(S, p.right_zero.witness));
    CHECK(is_left_zero(S, p.left_zero.witness));
    CHECK(is_max_chain(S, p.max_chain.witness));
    CHECK(is_min_chain(S, p.min_chain.witness));
    CHECK(is_fan(S, p.fan.witness));
    CHECK(is_subgroup(S, p.subgroup.witness));
    CHECK(p.square_size == square(S).size());

    // longest chain of idempotents by subset enumeration
    auto const  E = idempotents(S);
    std::size_t longest = 0;
    for (unsigned mask = 1; mask < (1u << E.size()); ++mask) {
      std::vector<element_index> X;
      for (std::size_t i = 0; i < E.size(); ++i) {
        if (mask >> i & 1) {
          X.push_back(E[i]);
        }
      }
      // order by the natural partial order, lowest first
      std::sort(X.begin(), X.end(), [&](auto a, auto b) {
        return a != b && S.product(a, b) == a && S.product(b, a) == a;
      });
      if (is_min_chain(S, X)) {
        longest = std::max(longest, X.size());
      }
    }
    CHECK(p.min_chain.size == longest);
  }
}

TEST_CASE("coloring predicates") {
  std::mt19937 rng(303);
  for (int r = 0; r < rounds; ++r) {
    auto const                 c = random_coloring(rng, 30, 2 + r % 3);
    std::vector<element_index> A;
    for (element_index x = 0; x < 30; ++x) {
      if (rng() % 3 == 0) {
        A.push_back(x);
      }
    }
    auto const v = mono_check(A, c);
    CHECK(v.is_mono == v.exceptions.empty());
    CHECK(almost_mono_check(A, c, 0) == v.is_mono);
    for (auto x : A) {
      bool const exc = std::binary_search(v.exceptions.begin(), v.exceptions.end(), x);
      CHECK(exc == (c(x) != v.majority_color));
    }
    CHECK(almost_mono_check(A, c, v.exceptions.size()));
  }
}

TEST_CASE("gcolor separates inverses in random groups") {
  std::mt19937 rng(404);
  for (std::size_t n = 1; n <= 30; ++n) {
    auto const G = cyclic_group(n);
    auto const g = gcolor(G);
    for (element_index x = 0; x < n; ++x) {
      auto const y = *inverse(G, 0, x);
      if (x == y) {
        CHECK_FALSE(g[x]);
      } else {
        REQUIRE(g[x]);
        REQUIRE(g[y]);
        CHECK(*g[x] != *g[y]);
        CHECK(*g[std::min(x, y)] == 0);
      }
    }
  }
  for (int r = 0; r < rounds; ++r) {
    auto const S = random_transformation_semigroup(rng, 4, 2);
    for (auto e : idempotents(S)) {
      auto const info = maximal_subgroup(S, e);
      auto const G    = restrict_to(S, info.elements);
      auto const id   = *group_identity(G);
      auto const g    = gcolor(G);
      for (element_index x = 0; x < G.size(); ++x) {
        auto const y = *inverse(G, id, x);
        CHECK(bool(g[x]) == (x != y));
        if (x != y) {
          CHECK(*g[x] != *g[y]);
        }
      }
    }
  }
}

TEST_CASE("truecolor transports the ncolor pattern along selected orbits") {
  std::mt19937 rng(505);
  for (int r = 0; r < rounds; ++r) {
    auto const S = random_transformation_semigroup(rng, 5, 2, 200);
    auto const L = std::size_t(2 + r % 4);
    auto const t = truecolor(S, L);
    std::set<element_index> used;
    for (auto b : t.orbit_bases) {
      auto const o = orbit(S, b);
      CHECK(o.elements.size() >= L);
      for (std::size_t i = 0; i < o.elements.size(); ++i) {
        CHECK(t.coloring(o.elements[i]) == ncolor_color(i + 1));
        CHECK(used.insert(o.elements[i]).second);
      }
    }
  }
}

TEST_CASE("boolean basis rank equals GF(2) elimination") {
  std::mt19937 rng(606);
  auto const   Z = z2_sum(8);
  for (int r = 0; r < rounds; ++r) {
    std::vector<element_index> gens;
    std::vector<unsigned>      rows;
    for (int i = 0; i < 1 + r % 6; ++i) {
      auto const x = element_index(rng() % 256);
      gens.push_back(x);
      rows.push_back(x);
    }
    auto const sub  = closure(Z, gens);
    auto const rank = gf2_rank(rows);
    auto const with_zero = [&] {
      auto s = sub;
      if (!std::binary_search(s.begin(), s.end(), 0u)) {
        s.insert(s.begin(), 0);
      }
      return s;
    }();
    auto const G = restrict_to(Z, with_zero);
    CHECK(boolean_group_basis(G).basis.size() == rank);
    CHECK(with_zero.size() == (std::size_t(1) << rank));
  }
}

TEST_CASE("fp and fphat agree in abelian semigroups") {
  std::mt19937 rng(707);
  std::vector<FiniteSemigroup> pool = {z2_sum(5), cyclic_group(11), why_mod_fin(4, 8),
                                       nat_max().truncate(9).semigroup()};
  for (auto const& S : pool) {
    for (int r = 0; r < 10; ++r) {
      std::vector<element_index> all(S.size());
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(std::min<std::size_t>(S.size(), 1 + r % 6));
      CHECK(fp_values(S, all) == fphat_values(S, all));
    }
  }
}

TEST_CASE("fp of a Z2 basis spans the first coordinates") {
  auto const Z = z2_sum(7);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<element_index> basis;
    for (std::size_t i = 0; i < n; ++i) {
      basis.push_back(element_index(1u << i));
    }
    element_set expect((std::size_t(1) << n) - 1);
    std::iota(expect.begin(), expect.end(), 1);
    CHECK(fp(Z, basis).value_set == expect);
  }
}

TEST_CASE("search_fp_mod_finite witnesses verify") {
  std::mt19937 rng(808);
  for (int r = 0; r < rounds; ++r) {
    auto const S      = random_transformation_semigroup(rng, 3, 2, 25);
    auto const c      = random_coloring(rng, S.size(), 2);
    auto const n      = std::min<std::size_t>(S.size(), 2 + r % 3);
    auto const budget = std::size_t(r % 3);
    auto const w      = search_fp_mod_finite(S, c, n, budget);
    if (w) {
      CHECK(w->seq.size() == n);
      auto const v = fp_values(S, w->seq);
      element_set exc;
      for (auto x : v) {
        if (c(x) != w->color) {
          exc.push_back(x);
        }
      }
      CHECK(exc == w->exceptions);
      CHECK(exc.size() <= budget);
    }
    CHECK(search_fp_mod_finite(S, c, n, fp_word_count(n) - 1));
  }
}

TEST_CASE("refine_fphat avoids F on random inputs") {
  std::mt19937 rng(909);
  auto const   Z = z2_sum(6);
  for (int r = 0; r < rounds; ++r) {
    std::vector<element_index> seq;
    std::set<element_index>    seen;
    while (seq.size() < 8) {
      auto const x = element_index(1 + rng() % 63);
      if (seen.insert(x).second) {
        seq.push_back(x);
      }
    }
    std::vector<element_index> F;
    for (int i = 0; i < 1 + r % 3; ++i) {
      F.push_back(element_index(rng() % 64));
    }
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    std::vector<color_index> a(64, 0);
    for (auto f : F) {
      a[f] = 1;
    }
    Coloring const c(a, 2);
    try {
      auto const out = refine_fphat(Z, c, seq, F);
      auto const v   = fphat_values(Z, out.subsequence);
      for (auto f : F) {
        CHECK_FALSE(std::binary_search(v.begin(), v.end(), f));
      }
      CHECK(out.verdict.is_mono);
      CHECK(std::is_sorted(out.positions.begin(), out.positions.end()));
    } catch (StuckAt const&) {
      // every element of seq lay in F
      for (auto x : seq) {
        CHECK(std::binary_search(F.begin(), F.end(), x));
      }
    }
  }
}

TEST_CASE("typehd models under every pattern") {
  std::vector<HDToken> const all = {HDToken::SQ, HDToken::AB, HDToken::BA,
                                    HDToken::X1E2};
  // all 15 set partitions of the four tokens, via restricted growth strings
  std::vector<EqPattern> patterns;
  for (int a = 0; a < 1; ++a)
    for (int b = 0; b <= a + 1; ++b)
      for (int c = 0; c <= std::max(a, b) + 1; ++c)
        for (int d = 0; d <= std::max({a, b, c}) + 1; ++d) {
          int const rgs[4] = {a, b, c, d};
          EqPattern p(4);
          for (int i = 0; i < 4; ++i) {
            p[rgs[i]].push_back(all[i]);
          }
          std::erase_if(p, [](auto const& blk) { return blk.size() < 2; });
          patterns.push_back(p);
        }
  CHECK(patterns.size() == 15);
  std::size_t built = 0;
  for (std::size_t h = 2; h <= 4; ++h) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (auto const& pat : patterns) {
        try {
          auto const M = build_typehd(h, d, 7, pat);
          ++built;
          CHECK(verify_hd(M).all_pass());
          CHECK(verify_lemma_she(M.semigroup, M.generators).all_pass());
          CHECK(idempotents(M.semigroup) == element_set{M.idempotent});
          CHECK(M.idempotent == M.powers[idempotent_power(h, d)]);
          auto const cert = extract_typehd(M.semigroup, M.generators, 6);
          CHECK(cert.all_pass());
          // merges can shorten the orbit of x1 below the nominal (h, d)
          auto const o = orbit(M.semigroup, M.generators[0]);
          CHECK(cert.h == o.index_h);
          CHECK(cert.d == o.period_d);
          if (pat.empty()) {
            CHECK(cert.h == h);
            CHECK(cert.d == d);
          }
        } catch (BadPattern const&) {
        }
      }
    }
  }
  CHECK(built > 9);
}

TEST_CASE("ramsey_find output is monochromatic") {
  std::mt19937 rng(111);
  for (int r = 0; r < rounds; ++r) {
    std::size_t const v = 6 + r % 10;
    EdgeColoring      g(v);
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        g.set(i, j, std::uint32_t(rng() % 2));
      }
    }
    auto const k = ramsey_find(g, 3);
    REQUIRE(k);
    CHECK(k->size() == 3);
    CHECK(std::is_sorted(k->begin(), k->end()));
    CHECK(g.color((*k)[0], (*k)[1]) == g.color((*k)[0], (*k)[2]));
    CHECK(g.color((*k)[0], (*k)[1]) == g.color((*k)[1], (*k)[2]));
  }
}

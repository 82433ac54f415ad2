#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "hindman/errors.hpp"
#include "hindman/families.hpp"
#include "hindman/shevrin.hpp"

using namespace hindman;

namespace {
  // Lex-least monochromatic k-subset by plain combination enumeration.
  std::optional<std::vector<std::size_t>> oracle_clique(EdgeColoring const& g,
                                                        std::size_t         k) {
    auto const v = g.vertices();
    if (k > v) {
      return std::nullopt;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      bool mono = true;
      for (std::size_t a = 0; a < k && mono; ++a) {
        for (std::size_t b = a + 1; b < k && mono; ++b) {
          mono = g.color(idx[a], idx[b]) == g.color(idx[0], idx[1]);
        }
      }
      if (mono) {
        return idx;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == v - k + i - 1) {
        --i;
      }
      if (i == 0) {
        return std::nullopt;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }

  std::vector<element_index> subset(std::size_t n, unsigned mask) {
    std::vector<element_index> X;
    for (element_index x = 0; x < n; ++x) {
      if (mask >> x & 1) {
        X.push_back(x);
      }
    }
    return X;
  }
}  // namespace

TEST_CASE("edge coloring storage is symmetric") {
  EdgeColoring g(5, 3);
  g.set(1, 4, 7);
  CHECK(g.color(4, 1) == 7);
  CHECK(g.color(0, 2) == 3);
}

TEST_CASE("ramsey_find basics") {
  EdgeColoring const k(8, 0);
  CHECK(ramsey_find(k, 4) == std::vector<std::size_t>{0, 1, 2, 3});

  EdgeColoring c5(5, 1);
  for (std::size_t i = 0; i < 5; ++i) {
    c5.set(i, (i + 1) % 5, 0);
  }
  CHECK_FALSE(ramsey_find(c5, 3));
  CHECK(ramsey_find(c5, 2) == std::vector<std::size_t>{0, 1});
  CHECK(ramsey_find(c5, 1) == std::vector<std::size_t>{0});
}

TEST_CASE("ramsey_find agrees with combination oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const v = 4 + trial % 7;
    std::size_t const colors = 2 + trial % 2;
    EdgeColoring      g(v);
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        g.set(i, j, std::uint32_t(rng() % colors));
      }
    }
    for (std::size_t k = 2; k <= std::min<std::size_t>(v, 5); ++k) {
      CHECK(ramsey_find(g, k) == oracle_clique(g, k));
    }
  }
}

TEST_CASE("shevrin pair coloring") {
  auto const M = build_typehd(3, 2, 5);
  auto const p = shevrin_pair_coloring(M.semigroup, M.generators);
  REQUIRE(p.palette.size() == 1);
  PairColor const expect = {M.powers[3], M.powers[2], M.ab, M.ba};
  CHECK(p.palette[0] == expect);

  auto const Z = zero_semigroup(4);
  std::vector<element_index> gens = {0, 1, 2, 3};
  auto const z = shevrin_pair_coloring(Z, gens);
  REQUIRE(z.palette.size() == 1);
  CHECK(z.palette[0] == PairColor{4, 4, 4, 4});

  std::vector<element_index> bad = {0, 4};
  CHECK_THROWS_AS(shevrin_pair_coloring(Z, bad), NotOutsideS2);
}

TEST_CASE("extract_typehd on models") {
  for (auto [h, d] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 3}}) {
    auto const M    = build_typehd(h, d, 12);
    auto const cert = extract_typehd(M.semigroup, M.generators, 5);
    CHECK(cert.all_pass());
    CHECK(cert.h == std::size_t(h));
    CHECK(cert.d == std::size_t(d));
    CHECK(cert.subsequence.size() == 5);
    CHECK(cert.structure_set == cert.closure_set);
    CHECK(cert.idempotent == M.idempotent);
    CHECK(cert.audit.ab_power == std::nullopt);
  }
  auto const Z    = zero_semigroup(10);
  auto const gens = non_products(Z);
  auto const cert = extract_typehd(Z, gens, 6);
  CHECK(cert.all_pass());
  CHECK(cert.h == 2);
  CHECK(cert.d == 1);
  element_set T(cert.subsequence.begin(), cert.subsequence.end());
  T.push_back(10);
  CHECK(cert.closure_set == T);
  // every product collapses to z, so b2b3 = b2^2 and the audit records it
  CHECK(cert.audit.ab_eq_sq);
  CHECK(cert.audit.ab_power == std::size_t(2));
}

TEST_CASE("extract_typehd with a merged pattern") {
  auto const M = build_typehd(3, 2, 8, {{HDToken::AB, HDToken::BA, HDToken::SQ}});
  auto const c = extract_typehd(M.semigroup, M.generators, 6);
  CHECK(c.all_pass());
  CHECK(c.audit.ab_eq_ba);
  CHECK(c.audit.ab_eq_sq);
}

TEST_CASE("extract_typehd failures") {
  auto const M = build_typehd(2, 1, 4);
  CHECK_THROWS_AS(extract_typehd(M.semigroup, M.generators, 6), RamseyFail);
  std::vector<element_index> with_product = {M.generators[0], M.powers[2]};
  CHECK_THROWS_AS(extract_typehd(M.semigroup, with_product, 2), NotOutsideS2);
}

TEST_CASE("classify_patterns") {
  auto const R = classify_patterns(right_zero(7), 10);
  CHECK(R.right_zero.size == 7);
  CHECK(R.left_zero.size == 1);

  auto const F = classify_patterns(fan().truncate(9).semigroup(), 12);
  CHECK(F.fan.size == 9);
  CHECK(F.fan.witness[0] == 0);

  auto const M = build_typehd(2, 1, 10);
  auto const T = classify_patterns(M.semigroup, 10);
  CHECK(T.square_size == 3);
  CHECK(T.subgroup.witness == std::vector<element_index>{M.idempotent});
  CHECK(T.right_zero.size == 1);

  auto const C = classify_patterns(materialize(parse_family_spec("natmax:6")), 10);
  CHECK(C.max_chain.size == 6);
  CHECK(C.min_chain.size == 6);
  CHECK(classify_patterns(z2_sum(3), 10).subgroup.size == 8);
}

TEST_CASE("classify_patterns witnesses and brute-force sizes") {
  std::vector<FiniteSemigroup> pool = {right_zero(4), left_zero(5), z2_sum(3),
                                       monogenic(3, 4), zero_semigroup(4),
                                       fan().truncate(6).semigroup(),
                                       nat_min().truncate(5).semigroup()};
  for (auto const& S : pool) {
    auto const p = classify_patterns(S, 16);
    CHECK(is_right_zero(S, p.right_zero.witness));
    CHECK(is_left_zero(S, p.left_zero.witness));
    CHECK(is_max_chain(S, p.max_chain.witness));
    CHECK(is_min_chain(S, p.min_chain.witness));
    CHECK(is_fan(S, p.fan.witness));
    CHECK(is_subgroup(S, p.subgroup.witness));

    std::size_t rz = 0, lz = 0, grp = 0;
    for (unsigned mask = 1; mask < (1u << S.size()); ++mask) {
      auto const X = subset(S.size(), mask);
      if (is_right_zero(S, X)) {
        rz = std::max(rz, X.size());
      }
      if (is_left_zero(S, X)) {
        lz = std::max(lz, X.size());
      }
      for (std::size_t i = 0; i < X.size(); ++i) {
        auto Y = X;
        std::swap(Y[0], Y[i]);
        if (is_subgroup(S, Y)) {
          grp = std::max(grp, X.size());
        }
      }
    }
    CHECK(p.right_zero.size == rz);
    CHECK(p.left_zero.size == lz);
    CHECK(p.subgroup.size == grp);
  }
}

TEST_CASE("finitely synchronizing and Z2-sum inputs carry mono subsemigroups") {
  std::mt19937 rng(23);
  auto const   F = fan().truncate(10).semigroup();
  auto const   M = nat_max().truncate(10).semigroup();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<color_index> a(10);
    for (auto& x : a) {
      x = color_index(rng() % 2);
    }
    Coloring const c(a, 2);
    auto const     rf = verify_thm35_direction3to1(F, c, Thm35Case::finsync);
    CHECK(rf.pass);
    for (auto x : rf.verdict.exceptions) {
      CHECK(x == 0);
    }
    auto const rm = verify_thm35_direction3to1(M, c, Thm35Case::finsync);
    CHECK(rm.pass);
    CHECK(rm.verdict.exceptions.empty());
  }
  auto const Z = z2_sum(3);
  auto const rz = verify_thm35_direction3to1(Z, Coloring({0, 1, 1, 1, 1, 1, 1, 1}, 2),
                                             Thm35Case::z2sum);
  CHECK(rz.pass);
  CHECK(rz.rank == 3);
  CHECK_THROWS_AS(verify_thm35_direction3to1(cyclic_group(4), Coloring::constant(4),
                                             Thm35Case::z2sum),
                  CaseInapplicable);
  CHECK_THROWS_AS(verify_thm35_direction3to1(z2_sum(3), Coloring::constant(8),
                                             Thm35Case::finsync),
                  CaseInapplicable);
}

TEST_CASE("largest boolean subgroup") {
  CHECK(largest_boolean_subgroup(z2_sum(4)).size() == 16);
  CHECK(largest_boolean_subgroup(cyclic_group(4)) == element_set{0, 2});
}

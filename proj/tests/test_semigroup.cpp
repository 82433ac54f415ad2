#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

#include "hindman/errors.hpp"
#include "hindman/families.hpp"
#include "hindman/semigroup.hpp"

using namespace hindman;

namespace {
  // Z_n built by hand so that the test does not depend on families.
  FiniteSemigroup zn(std::size_t n) {
    std::vector<std::string>                labels;
    std::vector<std::vector<element_index>> t(n, std::vector<element_index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = element_index((i + j) % n);
      }
    }
    return build_cayley(labels, t);
  }

  // Naive closure: iterate products until nothing new appears.
  std::set<element_index> naive_closure(FiniteSemigroup const&            S,
                                        std::vector<element_index> const& g) {
    std::set<element_index> out(g.begin(), g.end());
    bool                    grown = true;
    while (grown) {
      grown = false;
      for (auto a : std::vector(out.begin(), out.end())) {
        for (auto b : std::vector(out.begin(), out.end())) {
          grown |= out.insert(S.product(a, b)).second;
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("build_cayley rejects non-associative tables") {
  std::vector<std::vector<element_index>> t = {{1, 0}, {0, 0}};
  try {
    (void) build_cayley({"a", "b"}, t);
    FAIL("expected AssocViolation");
  } catch (AssocViolation const& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 0);
    CHECK(e.c == 1);
  }
}

TEST_CASE("build_cayley rejects bad shapes and ranges") {
  CHECK_THROWS_AS(build_cayley({"a", "b"}, {{0, 2}, {0, 0}}), RangeError);
  CHECK_THROWS_AS(build_cayley({"a", "b"}, {{0, 0}}), RangeError);
  CHECK_THROWS_AS(build_cayley({"a"}, {{0, 0}}), RangeError);
}

TEST_CASE("fold and power") {
  auto const S = zn(7);
  std::vector<element_index> w = {3, 5, 6};
  CHECK(S.fold(w) == 0);
  CHECK(S.power(3, 4) == 5);
  CHECK(S.find("4") == element_index(4));
  CHECK_FALSE(S.find("x"));
}

TEST_CASE("closure matches naive fixed point") {
  auto const S = monogenic(4, 6);
  for (element_index a = 0; a < S.size(); ++a) {
    for (element_index b = 0; b < S.size(); ++b) {
      std::vector<element_index> g = {a, b};
      auto const                 c = closure(S, g);
      auto const                 n = naive_closure(S, g);
      CHECK(std::vector(n.begin(), n.end()) == c);
    }
  }
}

TEST_CASE("square of a zero semigroup is the zero") {
  auto const Z = zero_semigroup(4);
  CHECK(square(Z) == element_set{4});
}

TEST_CASE("orbit index and period") {
  auto const S = monogenic(3, 4);
  auto const o = orbit(S, 0);
  CHECK(o.index_h == 3);
  CHECK(o.period_d == 4);
  CHECK(o.elements.size() == 6);
  CHECK(o.group_part == element_set{2, 3, 4, 5});
  // group part element b^4 (id 3) is the idempotent since 4 = 0 mod 4
  CHECK(idempotents(S) == element_set{3});
}

TEST_CASE("orbit in a truncation escapes") {
  auto const T = nat_plus().truncate(10);
  CHECK_FALSE(T.closed());
  CHECK_THROWS_AS(orbit(T, 0), EscapesTruncation);
  CHECK_THROWS_AS((void) T.semigroup(), EscapesTruncation);
  auto const M = nat_max().truncate(10);
  CHECK(M.closed());
  auto const o = orbit(M, 3);
  CHECK(o.index_h == 1);
  CHECK(o.period_d == 1);
}

TEST_CASE("truncation escape bookkeeping") {
  auto const T = nat_plus().truncate(5);
  // i + j <= 5 stays inside for values 1..5
  std::size_t inside = 0;
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      inside += a + b <= 5;
    }
  }
  CHECK(T.escape_count() == 25 - inside);
  CHECK(T.escaping_pairs().size() == T.escape_count());
  CHECK(T.product(0, 1) == 2);
  CHECK(T.index_of(4) == element_index(3));
}

TEST_CASE("maximal subgroup and inverses") {
  auto const S = monogenic(3, 4);
  auto const G = maximal_subgroup(S, 3);
  CHECK(G.elements == element_set{2, 3, 4, 5});
  CHECK_FALSE(G.exponent_le_2);
  for (auto x : G.elements) {
    auto const y = inverse(S, 3, x);
    REQUIRE(y);
    CHECK(S.product(x, *y) == 3);
  }
  CHECK_THROWS_AS(maximal_subgroup(S, 0), NotIdempotent);
}

TEST_CASE("group identity") {
  CHECK(group_identity(zn(5)) == element_index(0));
  CHECK_FALSE(group_identity(monogenic(2, 3)));
  CHECK_FALSE(group_identity(right_zero(3)));
}

TEST_CASE("periodicity of lazy families") {
  CHECK(is_periodic(nat_max(), 20).verdict == Periodicity::periodic);
  CHECK(is_periodic(fan(), 20).verdict == Periodicity::periodic);
  auto const r = is_periodic(nat_plus(), 20);
  CHECK(r.verdict == Periodicity::unknown_at_bound);
  CHECK(r.escaping_witness);
}

TEST_CASE("synchronizing checks") {
  CHECK_FALSE(synchronizing_check(right_zero(5)));
  CHECK_FALSE(synchronizing_check(left_zero(5)));
  CHECK_FALSE(synchronizing_check(nat_min().truncate(12).semigroup()));
  // (1,0)+(1,0) = (0,0) is outside {a, b}
  auto const w = synchronizing_check(z2_sum(2));
  REQUIRE(w);
  CHECK(*w == std::pair<element_index, element_index>{1, 1});

  auto const F = finitely_synchronizing_check(fan().truncate(10).semigroup(), 1);
  REQUIRE(F);
  CHECK(F->size() <= 1);
  CHECK(finitely_synchronizing_check(z2_sum(3), 8)->size() == 8);
  CHECK_FALSE(finitely_synchronizing_check(z2_sum(3), 3));
}

TEST_CASE("moving evidence on natmin") {
  auto const                        fam = nat_min();
  std::vector<LazyFamily::value_type> A = {1, 2, 3, 4, 5};
  std::vector<LazyFamily::value_type> F = {1};
  auto const r = moving_evidence(fam, A, F, 1, 50);
  CHECK(r.tuples_examined == 5);
  CHECK(r.bad_count == 1);
  CHECK(r.best_tuple == std::vector<LazyFamily::value_type>{2});
  // min(a, s) = 1 only for s = 1 once a >= 2
  std::vector<LazyFamily::value_type> t = {3};
  CHECK(count_trapped(fam, t, F, 50) == 1);
}

TEST_CASE("boolean basis of Z2^k") {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto const b = boolean_group_basis(z2_sum(k));
    CHECK(b.basis.size() == k);
    CHECK(b.commutative);
    CHECK(closure(z2_sum(k), b.basis).size() == (std::size_t(1) << k));
  }
  CHECK_THROWS_AS(boolean_group_basis(zn(4)), OrderViolation);
  CHECK_THROWS_AS(boolean_group_basis(right_zero(2)), NotAGroup);
}

TEST_CASE("restrict_to relabels") {
  auto const S = zn(6);
  std::vector<element_index> sub = {0, 2, 4};
  auto const                 R   = restrict_to(S, sub);
  CHECK(R.size() == 3);
  CHECK(R.label(1) == "2");
  CHECK(R.product(2, 2) == 1);
}

#include <sstream>

#include "doctest.h"

#include "hindman/coloring.hpp"
#include "hindman/errors.hpp"
#include "hindman/families.hpp"

using namespace hindman;

namespace {
  // Block enumeration: lengths 1, 2, 3, ... alternating from red.
  std::vector<color_index> enumerate_ncolor(std::size_t N) {
    std::vector<color_index> out;
    for (std::size_t len = 1; out.size() < N; ++len) {
      for (std::size_t i = 0; i < len && out.size() < N; ++i) {
        out.push_back(color_index((len - 1) % 2));
      }
    }
    return out;
  }

  Coloring read(std::string const& text, std::size_t n) {
    std::istringstream is(text);
    return read_coloring(is, n);
  }
}  // namespace

TEST_CASE("mono_check") {
  Coloring const c({0, 0, 1, 1, 0}, 2);
  std::vector<element_index> A = {0, 1, 2};
  auto v = mono_check(A, c);
  CHECK_FALSE(v.is_mono);
  CHECK(v.majority_color == 0);
  CHECK(v.exceptions == element_set{2});

  std::vector<element_index> tie = {0, 2};
  CHECK(mono_check(tie, c).majority_color == 0);
  std::vector<element_index> one = {2, 3};
  CHECK(mono_check(one, c).is_mono);

  std::vector<element_index> five = {0, 1, 2, 3, 4};
  CHECK(almost_mono_check(five, c, 2));
  CHECK_FALSE(almost_mono_check(five, c, 1));
  CHECK(almost_mono_check(one, c, 0) == mono_check(one, c).is_mono);
}

TEST_CASE("ncolor prefix") {
  auto const c = ncolor(11);
  std::vector<color_index> expect = {0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0};
  CHECK(c.assignment() == expect);
  std::vector<element_index> six = {0, 1, 2, 3, 4, 5};
  auto const v = mono_check(six, c);
  CHECK(v.majority_color == red);
  CHECK(v.exceptions.size() == 2);
}

TEST_CASE("ncolor closed form agrees with enumeration") {
  std::size_t const N = 10000;
  auto const        e = enumerate_ncolor(N);
  auto const        c = ncolor(N);
  for (std::size_t t = 1; t <= N; ++t) {
    auto const j = ncolor_block(t);
    CHECK(j * (j + 1) / 2 >= t);
    CHECK((j - 1) * j / 2 < t);
    CHECK(ncolor_color(t) == e[t - 1]);
    CHECK(c(element_index(t - 1)) == e[t - 1]);
  }
}

TEST_CASE("ncolor property") {
  auto const r = verify_ncolor_property(2000, 30);
  CHECK(r.all_pass());
  CHECK(r.rows.size() == 30);
  for (std::size_t n = 1; n <= 30; ++n) {
    CHECK(multiples_meet_all_colors(ncolor(2000), n));
  }
  // the constant coloring leaves <2> monochromatic
  CHECK_FALSE(multiples_meet_all_colors(Coloring::constant(100, 0, 2), 2));
}

TEST_CASE("gcolor") {
  auto const z5 = gcolor(cyclic_group(5));
  CHECK_FALSE(z5[0]);
  CHECK(z5[1] == color_index(0));
  CHECK(z5[4] == color_index(1));
  CHECK(z5[2] == color_index(0));
  CHECK(z5[3] == color_index(1));

  auto const z4 = gcolor(cyclic_group(4));
  CHECK(z4[1] == color_index(0));
  CHECK(z4[3] == color_index(1));
  CHECK_FALSE(z4[2]);

  for (auto const& x : gcolor(z2_sum(3))) {
    CHECK_FALSE(x);
  }
  CHECK_THROWS_AS(gcolor(right_zero(3)), NotAGroup);
}

TEST_CASE("truecolor") {
  auto const m = truecolor(monogenic(3, 4), 5);
  std::vector<color_index> expect = {0, 1, 1, 0, 0, 0};
  CHECK(m.coloring.assignment() == expect);
  CHECK(m.orbit_bases == std::vector<element_index>{0});

  auto const z5 = truecolor(cyclic_group(5), 6);
  CHECK(z5.orbit_bases.empty());
  std::vector<color_index> z5_expect = {0, 0, 0, 1, 1};
  CHECK(z5.coloring.assignment() == z5_expect);

  auto const z2 = truecolor(z2_sum(3), 4);
  CHECK(z2.coloring == Coloring::constant(8, 0, 2));
}

TEST_CASE("truecolor orbit pattern and sub-orbits") {
  // a long cyclic orbit: <1> in Z_21 has 21 elements >= 6*7/2
  auto const S = cyclic_group(21);
  auto const t = truecolor(S, 21);
  REQUIRE(!t.orbit_bases.empty());
  auto const o = orbit(S, t.orbit_bases[0]);
  for (std::size_t i = 0; i < o.elements.size(); ++i) {
    CHECK(t.coloring(o.elements[i]) == ncolor_color(i + 1));
  }
}

TEST_CASE("mod coloring") {
  auto const S = why_mod_fin(3, 5);
  auto const c = mod_coloring(S, 3);
  CHECK(c.palette_size() == 3);
  CHECK(c(*S.find("7")) == 1);
  CHECK(c(*S.find("0")) == 0);
  CHECK(mod_coloring(why_mod_fin(5, 4), 5)(*why_mod_fin(5, 4).find("16")) == 1);
  CHECK_THROWS_AS(mod_coloring(zero_semigroup(2), 2), PrecondViolation);
}

TEST_CASE("coloring text round trip and errors") {
  Coloring const c({2, 0, 1, 1}, 3);
  CHECK(read(to_coloring_text(c), 4) == c);
  CHECK_THROWS_AS(read("coloring v1\npalette=2\n0 0\n", 2), ParseError);
  CHECK_THROWS_AS(read("coloring v1\npalette=2\n0 0\n0 1\n", 2), ParseError);
  CHECK_THROWS_AS(read("coloring v1\npalette=2\n0 0\n1 2\n", 2), ParseError);
  CHECK_THROWS_AS(read("coloring v1\npalette=2\n0 0\n5 1\n", 2), ParseError);
  CHECK_THROWS_AS(read("colouring\n", 2), ParseError);
}

TEST_CASE("truecolor audit") {
  for (std::size_t L = 1; L <= 7; ++L) {
    CHECK(audit_truecolor(monogenic(3, 4), L).all_pass());
    CHECK(audit_truecolor(cyclic_group(21), L).all_pass());
    CHECK(audit_truecolor(z2_sum(3), L).all_pass());
  }
  auto const a = audit_truecolor(cyclic_group(5), 6);
  CHECK(a.orbits_selected == 0);
  CHECK(a.all_pass());
}

#include <sstream>

#include "doctest.h"

#include "hindman/cayley_io.hpp"
#include "hindman/errors.hpp"
#include "hindman/families.hpp"

using namespace hindman;

namespace {
  FiniteSemigroup parse(std::string const& text) {
    std::istringstream is(text);
    return read_cayley(is);
  }
}  // namespace

TEST_CASE("cayley round trip") {
  for (auto const& S : {right_zero(4), z2_sum(3), monogenic(3, 2),
                        build_typehd(3, 2, 4).semigroup, why_mod_fin(3, 5)}) {
    auto const text = to_cayley(S);
    CHECK(parse(text) == S);
    CHECK(to_cayley(parse(text)) == text);
  }
}

TEST_CASE("cayley format with comments") {
  auto const S = parse(
      "# two element semilattice\n"
      "cayley v1\n"
      "n=2   # size\n"
      "labels a b\n"
      "\n"
      "row 0: 0 0\n"
      "row 1: 0 1\n");
  CHECK(S.size() == 2);
  CHECK(S.label(1) == "b");
  CHECK(S.product(1, 0) == 0);
}

TEST_CASE("cayley parse errors") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("cayley v2\n"), ParseError);
  CHECK_THROWS_AS(parse("cayley v1\nn=x\n"), ParseError);
  CHECK_THROWS_AS(parse("cayley v1\nn=2\nlabels a\n"), ParseError);
  CHECK_THROWS_AS(parse("cayley v1\nn=2\nlabels a b\nrow 0: 0 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("cayley v1\nn=2\nlabels a b\nrow 0: 0\nrow 1: 0 0\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse("cayley v1\nn=2\nlabels a b\nrow 1: 0 0\nrow 0: 0 0\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse("cayley v1\nn=2\nlabels a b\nrow 0: 0 0\nrow 1: 0 0\nextra\n"),
      ParseError);
  try {
    parse("cayley v1\nn=2\nlabels a b\nrow 0: 0 0\nrow 1: 0 q\n");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line == 5);
  }
}

TEST_CASE("cayley table errors") {
  CHECK_THROWS_AS(parse("cayley v1\nn=2\nlabels a b\nrow 0: 0 2\nrow 1: 0 0\n"),
                  RangeError);
  CHECK_THROWS_AS(parse("cayley v1\nn=2\nlabels a b\nrow 0: 1 0\nrow 1: 0 0\n"),
                  AssocViolation);
}

TEST_CASE("cayley file errors") {
  CHECK_THROWS_AS(read_cayley_file("/nonexistent/none.cay"), Error);
}

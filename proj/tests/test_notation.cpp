#include <string>

#include "doctest.h"
#include "liegeom/catalog.hpp"
#include "liegeom/notation.hpp"
#include "test_support.hpp"

using namespace liegeom;
using liegeom::testing::random_int;
using liegeom::testing::random_nilpotent;

namespace {

const char* const kAlgebras[] = {
    "(0,0,e12,0)",
    "(0,0,e12,e13)",
    "(2*e13,2*e13,0)",
    "(e15,e25,2*e12+2*e35,2*e12+2*e35,0)",
    "(e15,e25,-2*e12+2*e35,-2*e12+2*e35,0)",
    "(e17,e27,e37,e47,2*e12+2*e34+2*e57,2*e12+2*e34+2*e57,0)",
    "(2/3*e17,2/3*e27,e12+1/3*e27+4/3*e37,-1/3*e17+4/3*e47,2*e12+2*e13+2*e24+2*e57,2*e12+2*e13+2*e24+2*e57,0)",
    "(0,0,0,e12,e13,e14-e23)",
    "(1/2*e19,1/2*e29,e39,e12+e49,e13+3/2*e59,e14-e23+3/2*e69,2*e16-4*e25-2*e34+2*e79,2*e16-4*e25-2*e34+2*e79,0)",
    "(1r6*e12,0,0)",
};

void check_round_trip(const LieAlgebra& g) {
  const std::string text = print_algebra(g);
  const LieAlgebra back = parse_algebra(text);
  REQUIRE(back.dim() == g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) CHECK(back.differentials()[k] == g.differentials()[k]);
  CHECK(print_algebra(back) == text);
}

}  // namespace

TEST_CASE("parse examples") {
  const LieAlgebra h = parse_algebra("(0, 0, e12)");
  CHECK(h.differentials()[2] == KForm::basis(3, {0, 1}));
  CHECK(parse_algebra("(0,0,-e21)").differentials()[2] == KForm::basis(3, {0, 1}));
  CHECK(print_algebra(parse_algebra("( 0 , 0 , 2*e12 - e12 )")) == "(0,0,e12)");
  CHECK(print_algebra(parse_algebra("(0,0,1/2r6*e12)")) == "(0,0,1/2r6*e12)");
  CHECK(print_algebra(parse_algebra("(0,0,(1+sqrt(6))*e12)")) == "(0,0,e12+1r6*e12)");
  CHECK(parse_algebra("(0,0,e12+1r6*e12)").differentials()[2].get({0, 1}) == Scalar::quadratic(1, 1, 6));
}

TEST_CASE("catalog algebras round-trip") {
  for (const char* text : kAlgebras) {
    CAPTURE(text);
    check_round_trip(parse_algebra(text));
  }
}

TEST_CASE("every catalog instance round-trips (algebra and metric)") {
  std::size_t count = 0;
  for (const auto& entry : catalog()) {
    for (const auto& sample : entry.samples()) {
      const CatalogInstance inst = instantiate(entry, sample);
      CAPTURE(entry.id);
      CAPTURE(sample.label);
      check_round_trip(inst.mla.algebra());
      const std::string metric = print_metric(inst.mla.gram());
      CHECK(parse_metric(metric, inst.mla.dim()) == inst.mla.gram());
      CHECK(print_metric(parse_metric(metric, inst.mla.dim())) == metric);
      ++count;
    }
  }
  CHECK(count >= 100);
}

TEST_CASE("100 random nilpotent algebras round-trip, including dim > 9") {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(random_int(3, trial % 10 == 0 ? 11 : 8));
    const LieAlgebra g = random_nilpotent(n);
    CAPTURE(print_algebra(g));
    check_round_trip(g);
    if (n > 9) CHECK(print_algebra(g).find("e[") != std::string::npos);
  }
}

TEST_CASE("malformed input is located") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_algebra(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("(0,0,e1x)") == 8);
  CHECK(column_of("(0,0,e11)") > 0);
  CHECK_THROWS_AS(parse_algebra("0,0,e12"), ParseError);
  CHECK_THROWS_AS(parse_algebra("(0,,e12)"), ParseError);
  CHECK_THROWS_AS(parse_algebra("(0,0,e14)"), ParseError);
  CHECK_THROWS_AS(parse_algebra("(0,0,0,0,0,0,0,0,0,e12)"), ParseError);  // bare digits above dim 9
  CHECK_NOTHROW(parse_algebra("(0,0,0,0,0,0,0,0,0,e[1,2])"));
  try {
    parse_algebra("(0,0,e12,e34)");
    FAIL("expected a Jacobi failure");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("Jacobi") != std::string::npos);
    CHECK(e.slot() == 4);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("one-constant mutations that break Jacobi are rejected with a located diagnostic") {
  int rejected = 0;
  for (const char* text : kAlgebras) {
    const LieAlgebra g = parse_algebra(text);
    const std::size_t n = g.dim();
    const auto& idx = multi_indices(n, 2);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t p = 0; p < idx.size(); ++p) {
        std::vector<KForm> d = g.differentials();
        d[k].at_position(p) += Scalar(1);
        const LieAlgebra mutated(d, {}, false);
        if (mutated.satisfies_jacobi()) {
          CHECK_NOTHROW(parse_algebra(print_algebra(mutated)));
          continue;
        }
        ++rejected;
        const std::string mtext = print_algebra(mutated);
        try {
          parse_algebra(mtext);
          FAIL("mutation accepted: " << mtext);
        } catch (const ParseError& e) {
          REQUIRE(e.slot() >= 1);
          REQUIRE(e.slot() <= n);
          CHECK(!mutated.d(d[e.slot() - 1]).is_zero());
          CHECK(e.column() >= 2);
          CHECK(e.column() <= mtext.size());
          const std::string msg = e.what();
          CHECK(msg.find("slot " + std::to_string(e.slot())) != std::string::npos);
        }
      }
    }
  }
  CHECK(rejected > 100);
}

TEST_CASE("metrics") {
  const Matrix g = parse_metric("e1.e2 + e3.e4", 4);
  CHECK(g(0, 1) == Scalar(1));
  CHECK(g(1, 0) == Scalar(1));
  CHECK(g(0, 0) == Scalar(0));
  const Matrix g2 = parse_metric("e1.e3 + 1/2*e2*e2 - e4*e4", 4);
  CHECK(g2(1, 1) == Scalar::rational(1, 2));
  CHECK(g2(3, 3) == Scalar(-1));
  CHECK(parse_metric(print_metric(g2), 4) == g2);
  CHECK_THROWS_AS(parse_metric("e1*e2", 2), ParseError);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = liegeom::testing::random_metric(5);
    CHECK(parse_metric(print_metric(m), 5) == m);
  }
}

TEST_CASE("forms, vectors, endomorphisms") {
  const KForm w = parse_form("e13+e24-2*e56", 6, 2);
  CHECK(w.get({0, 2}) == Scalar(1));
  CHECK(w.get({5, 4}) == Scalar(2));
  CHECK(parse_form(print_form(w), 6, 2) == w);
  CHECK(parse_form("0", 4, 2).is_zero());
  const Vector v = parse_vector("e1 - 2*e3", 3);
  CHECK(v == Vector{1, 0, -2});
  CHECK(parse_vector(print_vector(v), 3) == v);
  const Matrix j = parse_endomorphism("e1 -> e2; e2 -> -e1", 2);
  CHECK(j * j == -Matrix::identity(2));
  CHECK(parse_endomorphism(print_endomorphism(j), 2) == j);
  CHECK(parse_endomorphism("0", 3).is_zero());
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix f = liegeom::testing::random_matrix(4, 4);
    CHECK(parse_endomorphism(print_endomorphism(f), 4) == f);
  }
}

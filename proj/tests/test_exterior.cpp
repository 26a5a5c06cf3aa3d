#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "liegeom/exterior.hpp"
#include "test_support.hpp"

using namespace liegeom;
using liegeom::testing::random_int;
using liegeom::testing::random_metric;
using liegeom::testing::random_rational;

namespace {

KForm e(std::size_t dim, MultiIndex idx) {
  for (auto& i : idx) --i;  // tests use 1-based indices
  return KForm::basis(dim, std::move(idx));
}

KForm random_form(std::size_t dim, std::size_t k) {
  KForm f(dim, k);
  for (std::size_t p = 0; p < f.coeffs().size(); ++p) {
    if (random_int(0, 1)) f.at_position(p) = random_rational();
  }
  return f;
}

Vector random_vector(std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_rational();
  return v;
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

/// (a∧b)(v_1..v_{k+l}) by the permutation expansion with the determinant
/// normalization: (1/(k! l!)) Σ_σ sgn σ a(v_σ...) b(v_σ...).
Scalar wedge_bruteforce(const KForm& a, const KForm& b, const std::vector<Vector>& vs) {
  const std::size_t k = a.degree(), l = b.degree();
  std::vector<std::size_t> perm(k + l);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total;
  do {
    std::vector<Vector> va, vb;
    for (std::size_t i = 0; i < k; ++i) va.push_back(vs[perm[i]]);
    for (std::size_t i = k; i < k + l; ++i) vb.push_back(vs[perm[i]]);
    total += Scalar(permutation_sign(perm)) * a.evaluate(va) * b.evaluate(vb);
  } while (std::next_permutation(perm.begin(), perm.end()));
  long fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<long>(i);
  for (std::size_t i = 2; i <= l; ++i) fact *= static_cast<long>(i);
  return total / Scalar(fact);
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(e(4, {1}), e(4, {2})) == e(4, {1, 2}));
  CHECK(wedge(e(4, {1, 2}), e(4, {1, 2})).is_zero());
  const KForm w = e(4, {1, 3}) + e(4, {2, 4});
  const KForm ww = wedge(w, w);
  CHECK(ww == Scalar(-2) * e(4, {1, 2, 3, 4}));
  CHECK(ww.get({0, 2, 1, 3}) == Scalar(2));  // 2 e^{1324}
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < 4; ++i) basis.push_back(unit_vector(4, i));
  CHECK(wedge_bruteforce(w, w, basis) == ww.evaluate(basis));
  CHECK(wedge(e(3, {1, 2}), e(3, {2, 3})).is_zero());  // degree overflow / repeated
}

TEST_CASE("wedge is graded commutative and matches the permutation expansion") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = static_cast<std::size_t>(random_int(1, 2)), l = static_cast<std::size_t>(random_int(1, 2));
    const KForm a = random_form(5, k), b = random_form(5, l);
    const Scalar sign((k * l) % 2 ? -1 : 1);
    CHECK(wedge(a, b) == sign * wedge(b, a));
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < k + l; ++i) vs.push_back(random_vector(5));
    CHECK(wedge(a, b).evaluate(vs) == wedge_bruteforce(a, b, vs));
  }
}

TEST_CASE("contraction") {
  CHECK(contract(unit_vector(3, 0), e(3, {1, 2})) == e(3, {2}));
  CHECK(contract(unit_vector(3, 2), e(3, {1, 2})).is_zero());
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = static_cast<std::size_t>(random_int(1, 2));
    const KForm a = random_form(5, k), b = random_form(5, 2);
    const Vector v = random_vector(5);
    const Scalar sign(k % 2 ? -1 : 1);
    CHECK(contract(v, wedge(a, b)) == wedge(contract(v, a), b) + sign * wedge(a, contract(v, b)));
    CHECK(contract(v, contract(v, b)).is_zero());
    const Vector w = random_vector(5);
    CHECK(contract(v, b).evaluate({w}) == b.evaluate({v, w}));
  }
}

TEST_CASE("sharp and flat") {
  const Metric id(Matrix::identity(3));
  CHECK(id.flat(unit_vector(3, 0)) == e(3, {1}));
  Matrix h(2, 2);
  h(0, 1) = h(1, 0) = Scalar(1);
  CHECK(Metric(h).flat(unit_vector(2, 0)) == e(2, {2}));
  // e1.e3 + 1/2 e2*e2 - e4*e4
  Matrix g2(4, 4);
  g2(0, 2) = g2(2, 0) = Scalar(1);
  g2(1, 1) = Scalar::rational(1, 2);
  g2(3, 3) = Scalar(-1);
  CHECK(Metric(g2).flat(unit_vector(4, 3)) == Scalar(-1) * e(4, {4}));
  for (int trial = 0; trial < 10; ++trial) {
    const Metric g(random_metric(5));
    for (int k = 0; k < 20; ++k) {
      const Vector v = random_vector(5), w = random_vector(5);
      CHECK(g.sharp(g.flat(v)) == v);
      const KForm alpha = random_form(5, 1);
      CHECK(g(g.sharp(alpha), w) == alpha.evaluate({w}));
    }
  }
  CHECK_THROWS_AS(Metric(Matrix{{1, 1}, {1, 1}}), MathError);
}

TEST_CASE("form inner products") {
  const Metric g(Matrix::diagonal({1, -1, 1, -1}));
  CHECK(g.form_inner(e(4, {1, 2}), e(4, {1, 2})) == Scalar(-1));
  CHECK(g.form_inner(e(4, {1, 2}), e(4, {1, 3})) == Scalar(0));
  // ω = Σ ε_i e^{2i-1,2i} on ℝ^{2m} with metric diag(ε_1, ε_1, ε_2, ε_2, ...)
  for (int eps1 : {1, -1}) {
    for (int eps2 : {1, -1}) {
      for (int eps3 : {1, -1}) {
        const Metric gm(Matrix::diagonal({eps1, eps1, eps2, eps2, eps3, eps3}));
        const KForm w = Scalar(eps1) * e(6, {1, 2}) + Scalar(eps2) * e(6, {3, 4}) + Scalar(eps3) * e(6, {5, 6});
        CHECK(gm.form_inner(w, w) == Scalar(3));
        const Matrix j = gm.two_form_to_endo(w);
        CHECK(j * j == -Matrix::identity(6));
        CHECK(j * unit_vector(6, 1) == unit_vector(6, 0));  // ω♯ e2 = e1
      }
    }
  }
  // ⟨Ďω, ω⟩ = -Tr Ď for Ď = id on ℝ⁴; (Ďω)(x,y) = -ω(Ďx,y) - ω(x,Ďy)
  const Metric g4(Matrix::identity(4));
  const KForm w = e(4, {1, 2}) + e(4, {3, 4});
  const Matrix dcheck = Matrix::identity(4);
  const KForm dw = KForm::from_matrix(-(dcheck.transpose() * w.matrix() + w.matrix() * dcheck));
  CHECK(g4.form_inner(dw, w) == -dcheck.trace());
}

TEST_CASE("two_form_to_endo") {
  const Metric g(Matrix::identity(4));
  CHECK(g.two_form_to_endo(KForm(4, 2)).is_zero());
  for (int trial = 0; trial < 20; ++trial) {
    const Metric gm(random_metric(4));
    const KForm s = random_form(4, 2), t = random_form(4, 2);
    const Matrix ss = gm.two_form_to_endo(s), st = gm.two_form_to_endo(t);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(s.evaluate({unit_vector(4, i), unit_vector(4, j)}) == gm(unit_vector(4, i), ss * unit_vector(4, j)));
      }
    }
    CHECK(gm.form_inner(s, t) == Scalar::rational(1, 2) * gm.endo_inner(ss, st));
    CHECK(gm.endo_to_two_form(ss) == s);
  }
  // (Ďω)♯ = -(Ď + Ď*) J for Ď commuting with J on pseudo-Kähler ℝ⁴
  for (int trial = 0; trial < 10; ++trial) {
    const int e1 = random_int(0, 1) ? 1 : -1, e2 = random_int(0, 1) ? 1 : -1;
    const Metric gm(Matrix::diagonal({e1, e1, e2, e2}));
    const KForm w = Scalar(e1) * e(4, {1, 2}) + Scalar(e2) * e(4, {3, 4});
    const Matrix j = gm.two_form_to_endo(w);
    const Matrix x = liegeom::testing::random_matrix(4, 4);
    const Matrix d = x - j * x * j;  // commutes with J
    REQUIRE(commutator(d, j).is_zero());
    const KForm dw = KForm::from_matrix(-(d.transpose() * w.matrix() + w.matrix() * d));
    CHECK(gm.two_form_to_endo(dw) == -((d + gm.adjoint(d)) * j));
  }
}

TEST_CASE("adjoint and endomorphism inner product") {
  const Metric id(Matrix::identity(3));
  const Matrix f = liegeom::testing::random_matrix(3, 3);
  CHECK(id.adjoint(f) == f.transpose());
  for (int trial = 0; trial < 10; ++trial) {
    const Metric g(random_metric(4));
    const Matrix a = liegeom::testing::random_matrix(4, 4);
    const Vector x = random_vector(4), y = random_vector(4);
    CHECK(g(a * x, y) == g(x, g.adjoint(a) * y));
    CHECK(g.is_self_adjoint(g.symmetric_part(a)));
    CHECK(g.is_skew_adjoint(g.skew_part(a)));
    CHECK(g.symmetric_part(a) + g.skew_part(a) == a);
  }
}

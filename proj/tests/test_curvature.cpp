#include "doctest.h"
#include "liegeom/curvature.hpp"
#include "test_support.hpp"

using namespace liegeom;
using liegeom::testing::mla;
using liegeom::testing::random_derivation;
using liegeom::testing::random_int;
using liegeom::testing::random_metric;
using liegeom::testing::random_nilpotent;
using liegeom::testing::random_rational;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }

/// Semidirect product base ⋊_D ⟨e0⟩ with e0 last: [e0, x] = D x.
MetricLieAlgebra standard_extension_direct(const MetricLieAlgebra& base, const Matrix& d, int tau) {
  const std::size_t n = base.dim();
  std::vector<KForm> forms;
  for (std::size_t k = 0; k < n; ++k) {
    KForm f = embed_form(base.algebra().differentials()[k], n + 1);
    // de^k(e0, e_j) = -e^k([e0, e_j]) = -D(k, j)
    for (std::size_t j = 0; j < n; ++j) f.add({n, j}, -d(k, j));
    forms.push_back(f);
  }
  forms.emplace_back(n + 1, 2);
  Matrix g(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = base.gram()(i, j);
  }
  g(n, n) = Scalar(tau);
  return MetricLieAlgebra(LieAlgebra(forms), g);
}

MetricLieAlgebra central_extension_direct(const MetricLieAlgebra& base, const std::vector<CentralCocycle>& specs) {
  const std::size_t n = base.dim(), m = specs.size();
  std::vector<KForm> forms;
  for (const auto& f : base.algebra().differentials()) forms.push_back(embed_form(f, n + m));
  for (const auto& s : specs) forms.push_back(embed_form(s.sigma, n + m));
  Matrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = base.gram()(i, j);
  }
  for (std::size_t s = 0; s < m; ++s) g(n + s, n + s) = Scalar(specs[s].epsilon);
  return MetricLieAlgebra(LieAlgebra(forms), g);
}

/// Koszul formula: 2 g(∇_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
Scalar koszul(const MetricLieAlgebra& m, const Vector& x, const Vector& y, const Vector& z) {
  const LieAlgebra& a = m.algebra();
  return q(1, 2) * (m.g(a.bracket(x, y), z) - m.g(a.bracket(y, z), x) + m.g(a.bracket(z, x), y));
}

}  // namespace

TEST_CASE("golden Ricci tensors of the two four-dimensional examples") {
  const auto ex1 = ricci(mla("(0,0,e12,0)", "e1.e2 + e3.e4"));
  Matrix expected1(4, 4);
  expected1(2, 3) = q(-1, 2);
  CHECK(ex1.op == expected1);
  CHECK_FALSE(ex1.einstein.has_value());

  const auto ex2 = ricci(mla("(0,0,e12,e13)", "e1.e3 + 1/2*e2*e2 - e4*e4"));
  CHECK(ex2.op == Matrix::diagonal({q(-1, 2), 0, q(-1, 2), q(1, 2)}));
}

TEST_CASE("Levi-Civita connection agrees with the Koszul formula") {
  const auto heis = mla("(0,0,e12)", "e1*e1 + e2*e2 + e3*e3");
  // [e1, e2] = -e3 in the Salamon convention, so ∇_{e1} e2 = ½[e1, e2] = -½ e3
  CHECK(levi_civita(heis, unit_vector(3, 0), unit_vector(3, 1)) == Vector{0, 0, q(-1, 2)});
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(random_int(3, 5));
    const MetricLieAlgebra m(random_nilpotent(n), random_metric(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector nab = levi_civita(m, unit_vector(n, i), unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(m.g(nab, unit_vector(n, k)) == koszul(m, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k)));
        }
      }
    }
  }
}

TEST_CASE("Ricci formula agrees with the curvature of the connection") {
  for (const auto& [alg, met] : std::vector<std::pair<const char*, const char*>>{
           {"(0,0,e12,0)", "e1.e2 + e3.e4"},
           {"(0,0,e12,e13)", "e1.e3 + 1/2*e2*e2 - e4*e4"},
           {"(2*e13,2*e13,0)", "-e1*e1 + e2*e2 - e3*e3"},
           {"(e15,e25,2*e12+2*e35,2*e12+2*e35,0)", "e1*e1 + e2*e2 - e3*e3 + e4*e4 - e5*e5"}}) {
    const auto m = mla(alg, met);
    CHECK(ricci(m).ric == ricci_from_connection(m));
  }
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = static_cast<std::size_t>(random_int(3, 5));
    const MetricLieAlgebra base(random_nilpotent(n), random_metric(n));
    const auto ext = standard_extension_direct(base, random_derivation(base.algebra()), random_int(0, 1) ? 1 : -1);
    CHECK(ricci(ext).ric == ricci_from_connection(ext));
  }
}

TEST_CASE("Ex2 data: D^s and Tr((D^s)^2)") {
  const auto m = mla("(0,0,e12,e13)", "e1.e3 + 1/2*e2*e2 - e4*e4");
  const Scalar r38 = Scalar::quadratic(0, mpq_class(1, 4), 6);  // √(3/8)
  const Scalar r32 = Scalar::quadratic(0, mpq_class(1, 2), 6);  // √(3/2)
  for (int mu : {0, 1, 2}) {
    const Matrix d{{-r38, 0, 0, 0}, {0, r32, 0, 0}, {mu, 0, r38, 0}, {0, 1, 0, 0}};
    CHECK(m.algebra().is_derivation(d));
    const Matrix ds = m.symmetric_part(d);
    CHECK(ds == Matrix{{0, 0, 0, 0}, {0, r32, 0, -1}, {mu, 0, 0, 0}, {0, q(1, 2), 0, 0}});
    CHECK(ds.trace() == r32);
    CHECK((ds * ds).trace() == q(1, 2));
  }
}

TEST_CASE("blockwise standard-extension Ricci equals the direct computation on 30 random cases") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(random_int(3, 6));
    const MetricLieAlgebra base(random_nilpotent(n), random_metric(n));
    const Matrix d = random_derivation(base.algebra());
    const int tau = random_int(0, 1) ? 1 : -1;
    const auto block = ricci_of_standard_extension_blockwise(base, d, tau);
    const auto direct = ricci(standard_extension_direct(base, d, tau));
    CHECK(block.ric == direct.ric);
    CHECK(block.op == direct.op);
  }
}

TEST_CASE("blockwise central-extension Ricci equals the direct computation") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(random_int(2, 5));
    const MetricLieAlgebra base(random_nilpotent(n), random_metric(n));
    const auto closed = base.algebra().closed_forms(2);
    std::vector<CentralCocycle> specs;
    const int m = random_int(1, 2);
    for (int s = 0; s < m; ++s) {
      KForm sigma(n, 2);
      for (const auto& c : closed) sigma += random_rational() * c;
      specs.push_back({random_int(0, 1) ? 1 : -1, sigma});
    }
    const auto block = ricci_of_central_extension_blockwise(base, specs);
    const auto direct = ricci(central_extension_direct(base, specs));
    CHECK(block.ric == direct.ric);
  }
}

TEST_CASE("Einstein detection") {
  // dim 3 Sasaki-Einstein entry: Einstein with λ = 2
  const auto m = mla("(2*e13,2*e13,0)", "-e1*e1 + e2*e2 - e3*e3");
  const auto lam = is_einstein(m);
  REQUIRE(lam.has_value());
  CHECK(*lam == Scalar(2));
  CHECK(is_ricci_flat(MetricLieAlgebra(LieAlgebra::abelian(3), Matrix::identity(3))));
  CHECK_FALSE(is_ricci_flat(mla("(0,0,e12)", "e1*e1 + e2*e2 + e3*e3")));
}

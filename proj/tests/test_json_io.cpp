#include "doctest.h"
#include "liegeom/json_io.hpp"
#include "liegeom/notation.hpp"
#include "test_support.hpp"

using namespace liegeom;
using liegeom::testing::mla;

TEST_CASE("ZStandardData bundle round-trips through JSON") {
  const PseudoKahler seed = PseudoKahler::from_omega(mla("(0,0,e12,0)", "-e1*e1-e2*e2+e1.e4-e2.e3"),
                                                      parse_form("e13+e24+e12", 4, 2));
  Matrix d = parse_endomorphism("e1 -> 2/3*e1-1/3*e4; e2 -> 2/3*e2+1/3*e3; e3 -> 4/3*e3; e4 -> 4/3*e4", 4);
  const ZStandardData data{seed, d, -1, Scalar(2)};
  const Json j = to_json(data);
  CHECK(j["schema"] == kSchemaVersion);
  const ZStandardData back = z_standard_data_from_json(Json::parse(j.dump()));
  CHECK(print_algebra(back.reduction.mla.algebra()) == print_algebra(seed.mla.algebra()));
  CHECK(back.reduction.mla.gram() == seed.mla.gram());
  CHECK(back.reduction.J == seed.J);
  CHECK(back.reduction.omega == seed.omega);
  CHECK(back.Dcheck == d);
  CHECK(back.tau == -1);
  CHECK(back.h == Scalar(2));
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("Sasaki and metric bundles round-trip") {
  const PseudoKahler r2 = PseudoKahler::from_J(mla("(0,0)", "e1*e1+e2*e2"), parse_endomorphism("e1 -> -e2; e2 -> e1", 2));
  const ZStandardSasaki se = build_sasaki_einstein(r2, Matrix::identity(2));
  const Json j = to_json(se.structure);
  const AlmostContactMetric back = sasaki_from_json(j);
  CHECK(back.phi == se.structure.phi);
  CHECK(back.xi == se.structure.xi);
  CHECK(back.eta == se.structure.eta);
  CHECK(back.mla.gram() == se.structure.mla.gram());
  CHECK(to_json(back).dump() == j.dump());
  const MetricLieAlgebra m = metric_lie_algebra_from_json(to_json(se.structure.mla));
  CHECK(m.gram() == se.structure.mla.gram());
}

TEST_CASE("pseudo-Kahler bundles without a metric use g = -omega J") {
  Json j;
  j["algebra"] = "(0,0,e12,0,0,0)";
  j["omega"] = "e13+e24+e56";
  j["J"] = "e1 -> e2; e2 -> -e1; e3 -> e4; e4 -> -e3; e5 -> e6; e6 -> -e5";
  const PseudoKahler pk = pseudo_kahler_from_json(j);
  CHECK(pk.mla.gram() == -(pk.omega.matrix() * pk.J));
  CHECK(check_pseudo_kahler(pk).ok());
}

TEST_CASE("schema violations are reported") {
  Json j;
  j["schema"] = "liegeom/0";
  j["algebra"] = "(0,0)";
  j["metric"] = "e1*e1+e2*e2";
  CHECK_THROWS_AS(metric_lie_algebra_from_json(j), JsonError);
  CHECK_THROWS_AS(metric_lie_algebra_from_json(Json::array()), JsonError);
  Json missing;
  missing["algebra"] = "(0,0)";
  CHECK_THROWS_AS(metric_lie_algebra_from_json(missing), JsonError);
  Json pk;
  pk["algebra"] = "(0,0)";
  pk["J"] = "e1 -> -e2; e2 -> e1";
  CHECK_THROWS_AS(pseudo_kahler_from_json(pk), JsonError);
  CHECK_THROWS_AS(read_bundle_file("/nonexistent/file.json"), JsonError);
}

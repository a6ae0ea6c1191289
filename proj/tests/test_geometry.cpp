#include <catch2/catch.hpp>

#include "condgrad/condgrad.hpp"
#include "condgrad/geometry_io.hpp"
#include "oracles.hpp"

using namespace condgrad;

namespace {

Polyhedron unit_box_2d() {
  return Polyhedron(Matrix{{-1, 0}, {0, -1}, {1, 0}, {0, 1}}, Vec{0, 0, 1, 1});
}

// Single linear objective with a constant gradient; used to exercise the
// compatibility check against hand-picked regions.
MultiObjectiveProblem constant_gradient_problem(Polyhedron region, Vec grad, Vec lo, Vec hi) {
  const Vec g = grad;
  return MultiObjectiveProblem{
      "constant",
      region.dim(),
      1,
      [g](const Vec& x) { return Vec{dot(g, x)}; },
      [g](const Vec&) {
        Matrix j(1, g.size());
        for (std::size_t k = 0; k < g.size(); ++k) j(0, k) = g[k];
        return j;
      },
      1.0,
      std::move(region),
      true,
      std::move(lo),
      std::move(hi)};
}

}  // namespace

TEST_CASE("membership against the built-in regions") {
  const MultiObjectiveProblem ex1 = builtin_problem("ex1");
  const MultiObjectiveProblem ex2 = builtin_problem("ex2");
  CHECK(membership(ex1.region, Vec{0.5, 0.5}));
  CHECK_FALSE(membership(ex1.region, Vec{0, 0}));
  CHECK(membership(ex2.region, Vec{2, 1}));
  CHECK_THROWS_AS(membership(ex1.region, Vec{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("construction rejects empty or inconsistent regions") {
  CHECK_THROWS_AS(Polyhedron(Matrix{{1}, {-1}}, Vec{-1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Polyhedron(Matrix{{1, 0}}, Vec{1, 2}), std::invalid_argument);
  const Polyhedron box = unit_box_2d();
  CHECK(membership(box, box.feasible_point));
}

TEST_CASE("recession cones of the built-in regions") {
  const Polyhedron ex1 = builtin_problem("ex1").region;
  const PolyhedralCone cone1 = recession_cone(ex1);
  CHECK(cone1.contains(Vec{1, 0}));
  CHECK(cone1.contains(Vec{0, 1}));
  CHECK_FALSE(cone1.contains(Vec{-1, 0}));

  const Polyhedron ex2 = builtin_problem("ex2").region;
  const PolyhedralCone cone2 = recession_cone(ex2);
  CHECK(cone2.contains(Vec{2, 1}));
  CHECK(cone2.contains(Vec{-2, 1}));
  CHECK(cone2.contains(Vec{0, 1}));
  CHECK_FALSE(cone2.contains(Vec{1, 0}));
  // the cone of an a x <= b region is exactly {d : a d <= 0}
  for (std::size_t i = 0; i < ex2.num_rows(); ++i)
    for (std::size_t j = 0; j < ex2.dim(); ++j) CHECK(cone2.a(i, j) == ex2.a(i, j));
}

TEST_CASE("boundedness of the parent region") {
  CHECK(is_bounded(recession_cone(unit_box_2d())));
  CHECK_FALSE(is_bounded(recession_cone(builtin_problem("ex1").region)));
  CHECK_FALSE(is_bounded(recession_cone(builtin_problem("ex2").region)));
}

TEST_CASE("boundedness agrees with ray enumeration") {
  struct Case {
    const char* label;
    Polyhedron region;
  };
  const Case cases[] = {
      {"unit box", unit_box_2d()},
      {"triangle", Polyhedron(Matrix{{-1, 0}, {0, -1}, {1, 1}}, Vec{0, 0, 1})},
      {"ex1 region", builtin_problem("ex1").region},
      {"ex2 region", builtin_problem("ex2").region},
      {"halfplane", Polyhedron(Matrix{{1, 0}}, Vec{2})},
      {"strip", Polyhedron(Matrix{{-1, 0}, {1, 0}}, Vec{0, 1})},
      {"cube", Polyhedron(Matrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                          Vec{0, 0, 0, 1, 1, 1})},
      {"simplex", Polyhedron(Matrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 1, 1}}, Vec{0, 0, 0, 1})},
      {"shifted octant", Polyhedron(Matrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, Vec{1, 1, 1})},
      {"3d slab", Polyhedron(Matrix{{0, 0, 1}, {0, 0, -1}}, Vec{1, 1})},
  };
  for (const Case& c : cases) {
    INFO(c.label);
    CHECK(is_bounded(recession_cone(c.region)) == oracle::cone_is_trivial(c.region.a));
  }
}

TEST_CASE("cone members keep the region feasible at any scale") {
  const Polyhedron ex1 = builtin_problem("ex1").region;
  const Polyhedron ex2 = builtin_problem("ex2").region;
  const PolyhedralCone cone1 = recession_cone(ex1);
  const PolyhedralCone cone2 = recession_cone(ex2);
  const std::vector<Vec> dirs1 = {{1, 0}, {0, 1}, {2, 3}};
  const std::vector<Vec> dirs2 = {{2, 1}, {-2, 1}, {0, 1}};
  for (const double t : {1.0, 10.0, 100.0}) {
    for (const Vec& d : dirs1) {
      REQUIRE(cone1.contains(d));
      Vec y = ex1.feasible_point;
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += t * d[j];
      CHECK(membership(ex1, y));
    }
    for (const Vec& d : dirs2) {
      REQUIRE(cone2.contains(d));
      Vec y = ex2.feasible_point;
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += t * d[j];
      CHECK(membership(ex2, y));
    }
  }
}

TEST_CASE("region files convert every operator to canonical form") {
  const Polyhedron region = load_region_file(std::string(TEST_DATA_DIR) + "/region_mixed.json");
  CHECK(region.dim() == 2);
  CHECK(region.num_rows() == 4);  // <=, >=, and = expanded to a pair
  CHECK(membership(region, Vec{1, 0.5}));
  CHECK(membership(region, Vec{0.5, 1}));
  CHECK_FALSE(membership(region, Vec{1, 1}));
  CHECK_FALSE(membership(region, Vec{1.2, 0.3}));
}

TEST_CASE("region file errors are input errors") {
  CHECK_THROWS_AS(load_region_file("/nonexistent/region.json"), std::invalid_argument);
  CHECK_THROWS_AS(region_from_json(nlohmann::json{{"n", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(
      region_from_json(nlohmann::json::parse(
          R"({"n": 2, "rows": [{"a": [1, 0], "op": "<", "b": 1}]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      region_from_json(nlohmann::json::parse(
          R"({"n": 3, "rows": [{"a": [1, 0], "op": "<=", "b": 1}]})")),
      std::invalid_argument);
}

TEST_CASE("compatibility check holds on both built-in problems") {
  const A1Report r1 = check_assumption_a1(builtin_problem("ex1"), 50, 11);
  CHECK(r1.holds);
  CHECK(r1.samples_checked == 50);
  const A1Report r2 = check_assumption_a1(builtin_problem("ex2"), 50, 11);
  CHECK(r2.holds);
  CHECK(r2.samples_checked == 50);
}

TEST_CASE("compatibility check is trivial on bounded regions, whatever the objective") {
  // gradients that would violate the condition on an unbounded region
  SplitMix64 rng(8);
  for (std::size_t t = 0; t < 8; ++t) {
    const Vec grad{rng.next_double(-2, 2), rng.next_double(-2, 2)};
    const MultiObjectiveProblem prob =
        constant_gradient_problem(unit_box_2d(), grad, Vec{0, 0}, Vec{1, 1});
    const A1Report rep = check_assumption_a1(prob, 25, 5);
    CHECK(rep.holds);
    CHECK(rep.samples_checked == 0);
  }
}

TEST_CASE("compatibility violation reports a verifiable witness") {
  // nonnegative orthant with a gradient pointing out of its dual cone
  const MultiObjectiveProblem prob = constant_gradient_problem(
      Polyhedron(Matrix{{-1, 0}, {0, -1}}, Vec{0, 0}), Vec{-1, 0}, Vec{0, 0}, Vec{3, 3});
  const A1Report rep = check_assumption_a1(prob, 25, 5);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.witness_point.has_value());
  REQUIRE(rep.witness_gradient_index.has_value());
  REQUIRE(rep.witness_direction.has_value());
  CHECK(rep.samples_checked >= 1);
  const Vec& d = *rep.witness_direction;
  CHECK(recession_cone(prob.region).contains(d));
  CHECK(membership(prob.region, *rep.witness_point));
  const Matrix jac = eval_jacobian(prob, *rep.witness_point);
  CHECK(dot(jac.row(*rep.witness_gradient_index), d) <= tol::a1);
  CHECK(d[0] == Approx(1.0).margin(1e-9));
  CHECK(d[1] == Approx(0.0).margin(1e-9));
  CHECK(dot(jac.row(0), d) == Approx(-1.0).margin(1e-9));
}

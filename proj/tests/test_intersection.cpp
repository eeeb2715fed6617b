#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affproj/cone.hpp"
#include "affproj/intersection.hpp"
#include "instances.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace affproj;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

bool near(const Vector& a, const Vector& b, double tol) { return (a - b).norm() <= tol; }

// {x in R^dim : x_last = 0}
AffineSubspace drop_last(int dim) {
  std::vector<Vector> span;
  for (int i = 0; i + 1 < dim; ++i) span.push_back(Vector::Unit(dim, i));
  return affine_from_point_basis(Vector::Zero(dim), span);
}

}  // namespace

TEST_CASE("project_affine_hyperplane: the three cases") {
  SUBCASE("transversal: plane {x3 = 0} against x1 + x3 = 1") {
    const auto a = drop_last(3);
    const Hyperplane h(vec({1, 0, 1}), 1);
    const auto r = project_affine_hyperplane(a, h, vec({0, 0, 0}));
    CHECK(r.kind == TrichotomyCase::Transversal);
    CHECK(near(r.point, vec({1, 0, 0}), 1e-15));
    CHECK(r.gap == Vector::Zero(3));
    // Independent route: two equality constraints x3 = 0, x1 + x3 = 1.
    oracle::Mat c(2, 3);
    c << 0, 0, 1, 1, 0, 1;
    CHECK(near(r.point, oracle::constrained_nearest(c, vec({0, 1}), vec({0, 0, 0})), 1e-12));
  }
  SUBCASE("degenerate consistent: H contains A") {
    const auto r = project_affine_hyperplane(drop_last(2), Hyperplane(vec({0, 1}), 0), vec({4, 9}));
    CHECK(r.kind == TrichotomyCase::DegenerateConsistent);
    CHECK(r.point == vec({4, 0}));
    CHECK(r.gap == Vector::Zero(2));
  }
  SUBCASE("degenerate inconsistent: parallel lines at unit distance") {
    const auto r = project_affine_hyperplane(drop_last(2), Hyperplane(vec({0, 1}), 1), vec({4, 9}));
    CHECK(r.kind == TrichotomyCase::DegenerateInconsistent);
    CHECK(r.point == vec({4, 0}));
    CHECK(near(r.gap, vec({0, 1}), 1e-15));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(project_affine_hyperplane(drop_last(2), Hyperplane(vec({0, 1, 0}), 1), vec({4, 9})),
                    DimensionMismatch);
    CHECK_THROWS_AS(project_affine_hyperplane(drop_last(2), Hyperplane(vec({0, 1}), 1), vec({4, 9, 1})),
                    DimensionMismatch);
  }
  SUBCASE("whole space reduces to the hyperplane projector") {
    const auto a = affine_from_point_basis(Vector::Zero(2), std::vector<Vector>{vec({1, 0}), vec({0, 1})});
    const Hyperplane h(vec({3, 4}), 5);
    const auto r = project_affine_hyperplane(a, h, vec({2, -1}));
    CHECK(r.kind == TrichotomyCase::Transversal);
    CHECK(near(r.point, hyperplane_project(h, vec({2, -1})), 1e-14));
  }
  SUBCASE("singleton A") {
    const auto a = affine_from_point_basis(vec({1, 2}), {});
    CHECK(project_affine_hyperplane(a, Hyperplane(vec({1, 1}), 3), vec({9, 9})).kind ==
          TrichotomyCase::DegenerateConsistent);
    const auto r = project_affine_hyperplane(a, Hyperplane(vec({1, 1}), 5), vec({9, 9}));
    CHECK(r.kind == TrichotomyCase::DegenerateInconsistent);
    CHECK(near(r.gap, vec({1, 1}), 1e-15));
  }
}

TEST_CASE("gap_vector") {
  CHECK(near(gap_vector(drop_last(2), Hyperplane(vec({0, 1}), 1)), vec({0, 1}), 1e-15));
  CHECK(gap_vector(drop_last(3), Hyperplane(vec({1, 0, 1}), 1)) == Vector::Zero(3));
  CHECK(gap_vector(drop_last(2), Hyperplane(vec({0, 1}), 0)) == Vector::Zero(2));
  // Unnormalized normal: the set {2 x2 = 6} sits at distance 3 from {x2 = 0}.
  const Vector g = gap_vector(drop_last(2), Hyperplane(vec({0, 2}), 6));
  CHECK(near(g, vec({0, 3}), 1e-15));
  // Distance oracle: min over a in A of |<a,c> - gamma| / |c|, constant on A here.
  CHECK(g.norm() == doctest::Approx(std::abs(0.0 - 6.0) / 2.0));
  // Direction: from the A side toward H.
  CHECK(near(gap_vector(drop_last(2), Hyperplane(vec({0, -1}), 2)), vec({0, -2}), 1e-15));
}

TEST_CASE("generalized_project") {
  const auto a = drop_last(2);
  SUBCASE("parallel case lands on a fixed point of P_A P_H") {
    const Hyperplane h(vec({0, 1}), 1);
    const Vector p = generalized_project(a, h, vec({4, 9}));
    CHECK(p == vec({4, 0}));
    CHECK(near(affine_project(a, hyperplane_project(h, p)), p, 1e-15));
  }
  SUBCASE("consistent degenerate case equals P_A") {
    const Hyperplane h(vec({0, 3}), 0);
    CHECK(generalized_project(a, h, vec({-2, 5})) == affine_project(a, vec({-2, 5})));
  }
  SUBCASE("transversal case in dim 6 matches the KKT oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const oracle::Vec p = oracle::gaussian(rng, 6);
      const oracle::Mat s = oracle::gaussian(rng, 6, 3);
      const oracle::Vec c = oracle::gaussian(rng, 6);
      const double gamma = oracle::gaussian(rng, 1)[0];
      const oracle::Vec x = 3.0 * oracle::gaussian(rng, 6);
      std::vector<Vector> cols{s.col(0), s.col(1), s.col(2)};
      const auto set = affine_from_point_basis(p, cols);
      const Vector got = generalized_project(set, Hyperplane(c, gamma), x);
      CHECK(near(got, oracle::affine_hyperplane_nearest(p, s, c, gamma, x), 1e-9));
      CHECK(near(affine_project(set, hyperplane_project(Hyperplane(c, gamma), got)), got, 1e-9 * (1 + got.norm())));
    }
  }
}

TEST_CASE("classify_hyperplane_pair") {
  CHECK(classify_hyperplane_pair(Hyperplane(vec({1, 0}), 1), Hyperplane(vec({2, 0}), 2)).kind == PairKind::Identical);
  CHECK(classify_hyperplane_pair(Hyperplane(vec({1, 0}), 1), Hyperplane(vec({-3, 0}), -3)).kind == PairKind::Identical);
  CHECK(classify_hyperplane_pair(Hyperplane(vec({1, 0}), 0), Hyperplane(vec({1, 0}), 1)).kind ==
        PairKind::ParallelDistinct);
  CHECK(classify_hyperplane_pair(Hyperplane(vec({1, 0}), 5), Hyperplane(vec({0, 1}), -2)).kind == PairKind::Transversal);
  CHECK_THROWS_AS(classify_hyperplane_pair(Hyperplane(vec({1, 0}), 5), Hyperplane(vec({0, 1, 0}), -2)),
                  DimensionMismatch);
  // Point independence is structural (no query argument); scaling either plane
  // never changes the answer.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 10);
    const Vector c1 = oracle::gaussian(rng, n);
    const double g1 = oracle::gaussian(rng, 1)[0];
    const int which = trial % 3;
    const double lambda = oracle::uniform(rng, 0.1, 10) * (trial % 2 ? -1 : 1);
    Vector c2 = which == 2 ? Vector(oracle::gaussian(rng, n)) : Vector(lambda * c1);
    double g2 = which == 0 ? lambda * g1 : lambda * g1 + lambda * c1.norm() * oracle::uniform(rng, 0.5, 2);
    const PairKind expected = which == 0 ? PairKind::Identical : which == 1 ? PairKind::ParallelDistinct : PairKind::Transversal;
    const Hyperplane h1(c1, g1), h2(c2, g2);
    CHECK(classify_hyperplane_pair(h1, h2).kind == expected);
    CHECK(classify_hyperplane_pair(h1.scaled(-2.5), h2.scaled(0.01)).kind == expected);
  }
}

TEST_CASE("project_two_hyperplanes") {
  SUBCASE("zero out two coordinates") {
    const Hyperplane h1(vec({1, 0, 0}), 0), h2(vec({0, 1, 0}), 0);
    const auto r = project_two_hyperplanes(h1, h2, vec({3, 4, 5}));
    CHECK(r.kind == TrichotomyCase::Transversal);
    CHECK(near(r.point, vec({0, 0, 5}), 1e-15));
    REQUIRE(r.pair_determinant.has_value());
    CHECK(*r.pair_determinant == 1.0);
  }
  SUBCASE("members of the intersection are fixed") {
    const Hyperplane h1(vec({1, 2, 3}), 6), h2(vec({-1, 0, 4}), 3);
    const Vector x = vec({1, 1, 1});
    CHECK(near(project_two_hyperplanes(h1, h2, x).point, x, 1e-14));
  }
  SUBCASE("identical and parallel-distinct pairs") {
    const Hyperplane h1(vec({1, 0}), 1);
    const auto same = project_two_hyperplanes(h1, Hyperplane(vec({2, 0}), 2), vec({5, 5}));
    CHECK(same.kind == TrichotomyCase::DegenerateConsistent);
    CHECK(same.point == vec({1, 5}));
    const auto apart = project_two_hyperplanes(h1, Hyperplane(vec({-2, 0}), -8), vec({5, 5}));
    CHECK(apart.kind == TrichotomyCase::DegenerateInconsistent);
    CHECK(apart.point == vec({1, 5}));
    CHECK(near(apart.gap, vec({3, 0}), 1e-15));
  }
  SUBCASE("random non-parallel pairs in dim 9 match the 2-constraint KKT oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      const Vector c1 = oracle::gaussian(rng, 9), c2 = oracle::gaussian(rng, 9);
      const double g1 = oracle::gaussian(rng, 1)[0], g2 = oracle::gaussian(rng, 1)[0];
      const Vector x = 4.0 * oracle::gaussian(rng, 9);
      const auto r = project_two_hyperplanes(Hyperplane(c1, g1), Hyperplane(c2, g2), x);
      oracle::Mat c(2, 9);
      c.row(0) = c1.transpose();
      c.row(1) = c2.transpose();
      CHECK(near(r.point, oracle::constrained_nearest(c, vec({g1, g2}), x), 1e-9));
      CHECK(std::abs(r.point.dot(c1) - g1) <= 1e-10 * (1 + std::abs(g1)) * c1.norm());
      CHECK(std::abs(r.point.dot(c2) - g2) <= 1e-10 * (1 + std::abs(g2)) * c2.norm());
    }
  }
}

TEST_CASE("trichotomy invariants on constructed instances") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    const testing::Instance inst = testing::make_instance(rng, i);
    const auto set = inst.affine();
    const auto plane = inst.plane();
    const auto r = project_affine_hyperplane(set, plane, inst.query);
    REQUIRE(r.kind == inst.expected);
    CHECK((r.kind == TrichotomyCase::DegenerateInconsistent) == (r.gap.norm() > 0));
    CHECK(near(affine_project(set, r.point), r.point, 1e-9 * (1 + r.point.norm())));

    const double lambda = oracle::uniform(rng, 0.05, 20) * (i % 2 ? -1 : 1);
    const auto scaled = project_affine_hyperplane(set, plane.scaled(lambda), inst.query);
    CHECK(scaled.kind == r.kind);
    CHECK(near(scaled.point, r.point, 1e-10 * (1 + r.point.norm())));
    CHECK(near(gap_vector(set, plane), r.gap, 1e-12 * (1 + r.gap.norm())));

    if (r.kind == TrichotomyCase::Transversal) {
      CHECK(std::abs(r.point.dot(plane.normal()) - plane.offset()) <=
            1e-9 * (1 + std::abs(plane.offset())) * plane.normal().norm());
    } else {
      CHECK(r.point == affine_project(set, inst.query));
    }
  }
}

TEST_CASE("orthant_project") {
  CHECK(orthant_project(vec({3, -2})) == vec({3, 0}));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(orthant_project(vec({-s, -s})) == vec({0, 0}));
  CHECK(orthant_project(vec({s, s})) == vec({s, s}));
}

TEST_CASE("naive_cone_formula leaves the cone") {
  const double s = 1.0 / std::sqrt(2.0);
  const Vector v = vec({s, s});
  const Projector pk = orthant_project;
  for (double xi : {1.5, 2.0, 3.0, 10.0}) {
    const Vector q = naive_cone_formula(pk, v, s, vec({xi, 0}));
    // (xi,0) + (1/sqrt2 - xi/sqrt2) (1,1)/sqrt2 = ((1+xi)/2, (1-xi)/2)
    CHECK(near(q, vec({(1 + xi) / 2, (1 - xi) / 2}), 1e-14));
    CHECK(q[1] < 0);
    // With offset 1 the same formula produces (sqrt2 + xi, sqrt2 - xi) / 2.
    const Vector q1 = naive_cone_formula(pk, v, 1.0, vec({xi, 0}));
    CHECK(near(q1, 0.5 * vec({std::sqrt(2.0) + xi, std::sqrt(2.0) - xi}), 1e-14));
  }
  SUBCASE("both corrections vanish on K ∩ B") {
    const Vector x = vec({0.25, 0.75});
    CHECK(near(naive_cone_formula(pk, v, s, x), x, 1e-15));
  }
  SUBCASE("zero projected normal is rejected") {
    CHECK_THROWS_AS(naive_cone_formula(pk, vec({-s, -s}), 0.0, vec({1, 1})), DegenerateDirection);
  }
}

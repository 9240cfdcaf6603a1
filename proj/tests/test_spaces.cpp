#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "geobary/error.hpp"
#include "geobary/json_io.hpp"
#include "geobary/spaces.hpp"
#include "oracles.hpp"

using namespace geobary;

namespace {

Point E(std::vector<double> v) { return Point::euclidean(std::move(v)); }
Point L(double a, double b) { return Point::lp_plane({a, b}); }
Point T(std::size_t ray, double off) { return Point::tree(ray, off); }
Point H(double x0, double x1, double x2) { return Point::hyperbolic({x0, x1, x2}); }

std::vector<double> coords(const Point& p) { return {p.coords().begin(), p.coords().end()}; }

}  // namespace

TEST(Distance, EuclideanPythagorean) {
  EXPECT_DOUBLE_EQ(distance(make_euclidean(2), E({0, 0}), E({3, 4})), 5.0);
}

TEST(Distance, TreeSumsOffsetsThroughHub) {
  EXPECT_DOUBLE_EQ(distance(make_star_tree(3), T(1, 2), T(2, 3)), 5.0);
  EXPECT_DOUBLE_EQ(distance(make_star_tree(3), T(1, 2), T(1, 3)), 1.0);
}

TEST(Distance, HyperboloidParameterization) {
  const Space h = make_hyperbolic();
  EXPECT_NEAR(distance(h, H(std::cosh(1.0), std::sinh(1.0), 0), H(1, 0, 0)), 1.0, 1e-14);
}

TEST(Distance, HyperbolicMatchesAcoshOracle) {
  const Space h = make_hyperbolic();
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Point x = h->sample_point(rng);
    const Point y = h->sample_point(rng);
    EXPECT_NEAR(distance(h, x, y), oracle::hyperbolic(coords(x), coords(y)), 1e-9);
  }
}

TEST(Distance, HyperbolicIdentityIsExactZero) {
  const Space h = make_hyperbolic();
  const Point x = Point::hyperbolic_lift(0.7, -1.3);
  EXPECT_EQ(distance(h, x, x), 0.0);
}

TEST(Distance, LpMatchesNormOracle) {
  const Space s = make_lp_plane(3.5);
  EXPECT_NEAR(distance(s, L(0.2, -1), L(1.5, 2)), oracle::lp({0.2, -1}, {1.5, 2}, 3.5), 1e-14);
  EXPECT_DOUBLE_EQ(distance(make_lp_plane(2), L(0, 0), L(3, 4)), 5.0);
}

TEST(Distance, KindMismatchIsDomainError) {
  EXPECT_THROW(distance(make_euclidean(2), E({0, 0}), T(0, 1)), DomainError);
  EXPECT_THROW(distance(make_euclidean(2), E({0, 0}), E({0, 0, 0})), DomainError);
  EXPECT_THROW(distance(make_star_tree(3), T(0, 1), T(3, 1)), DomainError);
}

TEST(Midpoint, Examples) {
  EXPECT_EQ(midpoint(make_euclidean(2), E({0, 0}), E({2, 4})), E({1, 2}));
  EXPECT_EQ(midpoint(make_star_tree(3), T(1, 3), T(2, 1)), T(1, 1));
  const Point x = Point::hyperbolic_lift(0.3, 0.4);
  EXPECT_EQ(midpoint(make_hyperbolic(), x, x), x);
}

TEST(GeodesicPoint, Examples) {
  EXPECT_EQ(geodesic_point(make_euclidean(2), E({0, 0}), E({4, 0}), 0.25), E({1, 0}));
  EXPECT_TRUE(geodesic_point(make_star_tree(2), T(0, 2), T(1, 2), 0.5).is_hub());
  const Point m = geodesic_point(make_lp_plane(3), L(0, 0), L(2, 2), 0.5);
  EXPECT_NEAR(m.coords()[0], 1.0, 1e-15);
  EXPECT_NEAR(m.coords()[1], 1.0, 1e-15);
}

TEST(GeodesicPoint, RejectsParameterOutsideUnitInterval) {
  EXPECT_THROW(geodesic_point(make_euclidean(1), E({0}), E({1}), 1.5), DomainError);
  EXPECT_THROW(geodesic_point(make_euclidean(1), E({0}), E({1}), -0.1), DomainError);
}

TEST(HyperbolicGeodesic, HyperbolaBranch) {
  const Point x = H(1, 0, 0);
  const Point m = hyperbolic_geodesic(x, H(std::cosh(2.0), std::sinh(2.0), 0), 0.5);
  EXPECT_NEAR(m.coords()[0], std::cosh(1.0), 1e-14);
  EXPECT_NEAR(m.coords()[1], std::sinh(1.0), 1e-14);
  EXPECT_NEAR(m.coords()[2], 0.0, 1e-14);
  EXPECT_EQ(hyperbolic_geodesic(x, H(std::cosh(2.0), std::sinh(2.0), 0), 0.0), x);
  const Point n = hyperbolic_geodesic(x, H(std::cosh(1.0), 0, std::sinh(1.0)), 0.5);
  EXPECT_NEAR(n.coords()[0], std::cosh(0.5), 1e-14);
  EXPECT_NEAR(n.coords()[1], 0.0, 1e-14);
  EXPECT_NEAR(n.coords()[2], std::sinh(0.5), 1e-14);
}

TEST(TreeGeodesic, ArclengthArithmetic) {
  EXPECT_TRUE(tree_geodesic(3, T(1, 3), T(2, 1), 0.75).is_hub());
  EXPECT_EQ(tree_geodesic(3, T(1, 3), T(2, 1), 0.875), T(2, 0.5));
  EXPECT_EQ(tree_geodesic(2, T(0, 1), T(0, 5), 0.5), T(0, 3));
}

TEST(Point, HubIsCanonical) {
  EXPECT_EQ(T(2, 0.0), T(0, 0.0));
  EXPECT_TRUE(T(1, 0.0).is_hub());
  EXPECT_THROW(T(0, -1.0), DomainError);
  EXPECT_THROW(T(0, NAN), DomainError);
}

TEST(Point, HyperboloidConstraint) {
  EXPECT_THROW(H(1, 1, 0), DomainError);
  EXPECT_THROW(H(-1, 0, 0), DomainError);
  EXPECT_THROW(Point::euclidean({INFINITY}), DomainError);
  const Point p = Point::hyperbolic_lift(2.0, -1.0);
  const auto c = p.coords();
  EXPECT_NEAR(-c[0] * c[0] + c[1] * c[1] + c[2] * c[2], -1.0, 1e-12);
}

TEST(Modulus, Examples) {
  EXPECT_DOUBLE_EQ(modulus(make_euclidean(2))(1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(modulus(make_lp_plane(2))(1.0, 2.0), 1.0);
  EXPECT_NEAR(modulus(make_lp_plane(4))(1.0, 1.0), 1.0 - std::pow(1.0 - std::pow(0.5, 4), 0.25), 1e-15);
  EXPECT_NEAR(modulus(make_lp_plane(4))(1.0, 1.0), 0.01600, 1e-5);
}

TEST(Modulus, LpCrossCheckBySampling) {
  const Space s = make_lp_plane(4);
  const double eta = modulus(s)(1.0, 1.0);
  Rng rng(11);
  double worst = 1.0;
  const Point a = L(0, 0);
  for (int i = 0; i < 200000; ++i) {
    const double t1 = rng.uniform(0, 2 * M_PI), t2 = rng.uniform(0, 2 * M_PI);
    auto unit = [&](double t) {
      const double c = std::cos(t), sn = std::sin(t);
      const double n = std::pow(std::pow(std::fabs(c), 4) + std::pow(std::fabs(sn), 4), 0.25);
      return L(c / n, sn / n);
    };
    const Point x = unit(t1), y = unit(t2);
    if (distance(s, x, y) < 1.0) continue;
    worst = std::min(worst, 1.0 - distance(s, midpoint(s, x, y), a));
  }
  EXPECT_GE(worst, eta - 1e-12);
  EXPECT_LE(worst, eta + 1e-3);
}

TEST(Modulus, RejectsParameters) {
  const Modulus m = modulus(make_euclidean(2));
  EXPECT_THROW(m(0.0, 1.0), DomainError);
  EXPECT_THROW(m(1.0, 0.0), DomainError);
  EXPECT_THROW(m(1.0, 2.5), DomainError);
}

TEST(Descriptor, Construction) {
  const Space s = make_space(descriptor_from_json(nlohmann::json::parse(R"({"kind":"euclidean","dim":3})")));
  EXPECT_EQ(s.kind(), SpaceKind::euclidean);
  EXPECT_EQ(s.name(), "euclidean(3)");
  EXPECT_THROW(make_space(descriptor_from_json(nlohmann::json::parse(R"({"kind":"star_tree","rays":1})"))),
               ConfigError);
  EXPECT_THROW(make_space(descriptor_from_json(nlohmann::json::parse(R"({"kind":"lp_plane","p":1.5})"))),
               ConfigError);
  EXPECT_THROW(descriptor_from_json(nlohmann::json::parse(R"({"kind":"sphere"})")), ConfigError);
  EXPECT_THROW(make_euclidean(0), ConfigError);
}

TEST(Descriptor, RoundTrip) {
  for (const Space& s : {make_euclidean(4), make_hyperbolic(), make_star_tree(5), make_lp_plane(3)}) {
    const SpaceDescriptor d = *descriptor_of(s);
    EXPECT_EQ(make_space(descriptor_from_json(to_json(d))).name(), s.name());
  }
}

TEST(LinePoint, FarHyperbolicDistanceHasLogForm) {
  const Space h = make_hyperbolic();
  const Point base = Point::hyperbolic_lift(0.1, 0.2);
  EXPECT_NEAR(h->line_distance(base, 10000.0, base), 10000.0, 1e-8);
  EXPECT_NEAR(h->line_distance(base, 100.0, base), 100.0, 1e-8);
}

TEST(FaultyMidpoint, ReturnsFirstArgument) {
  const Space f = make_faulty_midpoint_space(make_euclidean(2));
  EXPECT_EQ(midpoint(f, E({0, 0}), E({2, 0})), E({0, 0}));
}

#include "geobary/space.hpp"

#include <cmath>
#include <string>

#include "geobary/error.hpp"

namespace geobary {

double Modulus::operator()(double r, double eps) const {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("modulus: r must be positive");
  if (!(eps > 0.0) || eps > 2.0) throw DomainError("modulus: eps must lie in (0, 2]");
  return fn_(r, eps);
}

double GeodesicSpace::distance(const Point& x, const Point& y) const {
  return static_cast<double>(std::sqrt(squared_distance(x, y)));
}

Point GeodesicSpace::midpoint(const Point& x, const Point& y) const {
  return geodesic_point(x, y, 0.5);
}

double GeodesicSpace::line_distance(const Point& base, double s, const Point& y) const {
  return distance(line_point(base, s), y);
}

std::vector<std::pair<Point, Point>> GeodesicSpace::extremal_pairs(const Point& a, double r,
                                                                   double eps) const {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.emplace_back(line_point(a, r), line_point(a, (1.0 - eps) * r));
  return pairs;
}

std::optional<std::vector<double>> GeodesicSpace::chart(const Point&) const { return std::nullopt; }

Point GeodesicSpace::from_chart(std::span<const double>) const {
  throw DomainError(name() + " has no global chart");
}

Space::Space(std::shared_ptr<const GeodesicSpace> impl) : impl_(std::move(impl)) {
  if (!impl_) throw ConfigError("space: null implementation");
}

double distance(const Space& space, const Point& x, const Point& y) {
  space.check(x);
  space.check(y);
  return space->distance(x, y);
}

long double squared_distance(const Space& space, const Point& x, const Point& y) {
  space.check(x);
  space.check(y);
  return space->squared_distance(x, y);
}

Point midpoint(const Space& space, const Point& x, const Point& y) {
  space.check(x);
  space.check(y);
  return space->midpoint(x, y);
}

Point geodesic_point(const Space& space, const Point& x, const Point& y, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("geodesic_point: t = " + std::to_string(t) + " outside [0, 1]");
  }
  space.check(x);
  space.check(y);
  return space->geodesic_point(x, y, t);
}

Modulus modulus(const Space& space) { return space->modulus(); }

}  // namespace geobary

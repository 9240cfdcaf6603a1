#include "geobary/point.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geobary/error.hpp"

namespace geobary {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite coordinate");
  }
}

}  // namespace

std::string_view to_string(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::euclidean:
      return "euclidean";
    case SpaceKind::hyperbolic:
      return "hyperbolic";
    case SpaceKind::star_tree:
      return "star_tree";
    case SpaceKind::lp_plane:
      return "lp_plane";
  }
  return "unknown";
}

double minkowski_dot(std::span<const double> a, std::span<const double> b) noexcept {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Point Point::euclidean(std::vector<double> coords) {
  if (coords.empty()) throw DomainError("euclidean point: empty coordinate vector");
  require_finite(coords, "euclidean point");
  return Point(SpaceKind::euclidean, std::move(coords), {});
}

Point Point::lp_plane(std::vector<double> coords) {
  if (coords.size() != 2) throw DomainError("lp_plane point: expected 2 coordinates");
  require_finite(coords, "lp_plane point");
  return Point(SpaceKind::lp_plane, std::move(coords), {});
}

Point Point::hyperbolic(const std::array<double, 3>& ambient) {
  require_finite(ambient, "hyperbolic point");
  const long double q = -static_cast<long double>(ambient[0]) * ambient[0] +
                        static_cast<long double>(ambient[1]) * ambient[1] +
                        static_cast<long double>(ambient[2]) * ambient[2];
  // Drift is measured relative to x0^2: rounding the ambient coordinates
  // alone perturbs <x,x> by about x0^2 ulp.
  const long double x0_sq = static_cast<long double>(ambient[0]) * ambient[0];
  if (!(ambient[0] > 0.0) || std::fabs(q + 1.0L) > 1e-9L * std::max(1.0L, x0_sq)) {
    throw DomainError("hyperbolic point: off the upper hyperboloid sheet");
  }
  // Far out, <x,x> is dominated by rounding; only the spatial part is kept.
  const long double scale = x0_sq > 1e12L ? 1.0L : 1.0L / std::sqrt(-q);
  const long double x1 = ambient[1] * scale;
  const long double x2 = ambient[2] * scale;
  const long double x0 = std::sqrt(1.0L + x1 * x1 + x2 * x2);
  return Point(SpaceKind::hyperbolic,
               {static_cast<double>(x0), static_cast<double>(x1), static_cast<double>(x2)}, {});
}

Point Point::hyperbolic_lift(double x1, double x2) {
  const std::array<double, 2> v{x1, x2};
  require_finite(v, "hyperbolic point");
  const long double x0 =
      std::sqrt(1.0L + static_cast<long double>(x1) * x1 + static_cast<long double>(x2) * x2);
  if (!std::isfinite(static_cast<double>(x0))) throw DomainError("hyperbolic point: overflow");
  return Point(SpaceKind::hyperbolic, {static_cast<double>(x0), x1, x2}, {});
}

Point Point::tree(std::size_t ray, double offset) {
  if (!std::isfinite(offset)) throw DomainError("tree point: non-finite offset");
  if (offset < 0.0) throw DomainError("tree point: negative offset");
  if (offset == 0.0) ray = 0;
  return Point(SpaceKind::star_tree, {}, TreePoint{ray, offset});
}

}  // namespace geobary

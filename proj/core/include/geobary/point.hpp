#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace geobary {

enum class SpaceKind { euclidean, hyperbolic, star_tree, lp_plane };

std::string_view to_string(SpaceKind kind) noexcept;

/// Location on a star tree: ray index plus arclength offset from the hub.
struct TreePoint {
  std::size_t ray = 0;
  double offset = 0.0;

  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

/// Tagged location in one of the supported space kinds.
///
/// Euclidean and lp_plane points carry a real vector, hyperbolic points the
/// three ambient coordinates (x0, x1, x2) on the upper hyperboloid sheet,
/// and star_tree points a TreePoint. The factories validate finiteness and
/// the per-kind invariants; they do not know the owning space's parameters
/// (dimension, ray count), which the space checks on use.
class Point {
 public:
  static Point euclidean(std::vector<double> coords);
  static Point lp_plane(std::vector<double> coords);

  /// Accepts points within 1e-9 of the sheet and rescales them onto it.
  static Point hyperbolic(const std::array<double, 3>& ambient);

  /// Hyperboloid point above (x1, x2): x0 = sqrt(1 + x1^2 + x2^2).
  static Point hyperbolic_lift(double x1, double x2);

  /// An offset of zero is mapped to the canonical hub (ray 0, offset 0).
  static Point tree(std::size_t ray, double offset);

  SpaceKind kind() const noexcept { return kind_; }

  /// Real coordinates; empty for star_tree points.
  std::span<const double> coords() const noexcept { return coords_; }

  /// Tree coordinates; meaningful only for star_tree points.
  const TreePoint& tree() const noexcept { return tree_; }

  bool is_hub() const noexcept {
    return kind_ == SpaceKind::star_tree && tree_.offset == 0.0;
  }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  Point(SpaceKind kind, std::vector<double> coords, TreePoint tree)
      : kind_(kind), coords_(std::move(coords)), tree_(tree) {}

  SpaceKind kind_;
  std::vector<double> coords_;
  TreePoint tree_;
};

/// Minkowski bilinear form -a0 b0 + a1 b1 + a2 b2.
double minkowski_dot(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace geobary

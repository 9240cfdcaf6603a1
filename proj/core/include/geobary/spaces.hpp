#pragma once

#include <cstddef>
#include <optional>

#include "geobary/point.hpp"
#include "geobary/space.hpp"

namespace geobary {

/// Parameters naming one concrete space. Only the field matching `kind`
/// is meaningful.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::euclidean;
  std::size_t dim = 2;    // euclidean
  std::size_t rays = 3;   // star_tree
  double p = 2.0;         // lp_plane

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

/// Throws ConfigError for dim < 1, rays < 2, p < 2 or non-finite p.
Space make_space(const SpaceDescriptor& descriptor);

Space make_euclidean(std::size_t dim);
Space make_hyperbolic();
Space make_star_tree(std::size_t rays);
Space make_lp_plane(double p);

/// Descriptor a space was built from; nullopt for wrapped/fault spaces.
std::optional<SpaceDescriptor> descriptor_of(const Space& space);

/// Hyperboloid geodesic gamma(t) = cosh(t d) x + sinh(t d) u with
/// u = (y + <x,y> x) / sinh d, renormalized onto the sheet.
Point hyperbolic_geodesic(const Point& x, const Point& y, double t);

/// Star-tree geodesic computed in arclength coordinates.
Point tree_geodesic(std::size_t rays, const Point& x, const Point& y, double t);

/// Wraps `inner` but replaces midpoint(x, y) with x. Used to exercise the
/// verification suite's failure path.
Space make_faulty_midpoint_space(Space inner);

}  // namespace geobary

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geobary/point.hpp"
#include "geobary/random.hpp"

namespace geobary {

/// Comparison tolerances. `geometry` applies to geometric postconditions
/// (midpoint distances, sheet drift), `exact` to identities that hold in
/// exact arithmetic up to a few roundings.
struct Tolerances {
  double geometry = 1e-9;
  double exact = 1e-12;
};

/// A modulus of uniform convexity eta(r, eps) together with its metadata.
class Modulus {
 public:
  using Fn = std::function<double(double r, double eps)>;

  Modulus(std::string form, Fn fn, bool r_dependent, bool monotone_in_r)
      : form_(std::move(form)),
        fn_(std::move(fn)),
        r_dependent_(r_dependent),
        monotone_in_r_(monotone_in_r) {}

  /// Throws DomainError unless r > 0 and 0 < eps <= 2.
  double operator()(double r, double eps) const;

  const std::string& form() const noexcept { return form_; }
  bool r_dependent() const noexcept { return r_dependent_; }
  bool monotone_in_r() const noexcept { return monotone_in_r_; }

 private:
  std::string form_;
  Fn fn_;
  bool r_dependent_;
  bool monotone_in_r_;
};

/// A uniquely geodesic space.
///
/// The virtual interface works on already validated points; the free
/// functions below (distance, midpoint, ...) perform the kind and range
/// checks and are what callers should use.
class GeodesicSpace {
 public:
  virtual ~GeodesicSpace() = default;

  virtual SpaceKind kind() const noexcept = 0;

  /// Human-readable name such as "euclidean(3)".
  virtual std::string name() const = 0;

  /// True for the CAT(0) instances; enables the CN comparison bounds.
  virtual bool is_cat0() const noexcept = 0;

  /// Checks kind and kind-specific parameters (dimension, ray index).
  virtual void validate(const Point& p) const = 0;

  /// Squared distance evaluated in extended precision. Objective sums are
  /// accumulated from this so that line searches can resolve minimizers
  /// below the double-precision flatness floor.
  virtual long double squared_distance(const Point& x, const Point& y) const = 0;

  virtual double distance(const Point& x, const Point& y) const;

  /// The point at arclength t * d(x,y) from x on the geodesic [x, y].
  virtual Point geodesic_point(const Point& x, const Point& y, double t) const = 0;

  virtual Point midpoint(const Point& x, const Point& y) const;

  virtual Modulus modulus() const = 0;

  /// Point at signed arclength s on a fixed geodesic line through base.
  virtual Point line_point(const Point& base, double s) const = 0;

  /// d(line_point(base, s), y). Overridden where the point itself cannot be
  /// represented at large s.
  virtual double line_distance(const Point& base, double s, const Point& y) const;

  /// Random point of unit scale, used by the verification samplers.
  virtual Point sample_point(Rng& rng) const = 0;

  /// Random point at distance exactly rho from a.
  virtual Point sample_at_distance(Rng& rng, const Point& a, double rho) const = 0;

  /// Random point at distance rho from a on the extension of the geodesic
  /// [x, a] beyond a (so d(x, result) = d(x, a) + rho). Requires x != a.
  virtual Point sample_opposite(Rng& rng, const Point& a, const Point& x, double rho) const = 0;

  /// Configurations (x, y) with d(x,a), d(y,a) <= r and d(x,y) = eps * r
  /// that attain or approach the infimum of the midpoint deficiency. The
  /// default returns the collinear configuration on line_point(a, .).
  virtual std::vector<std::pair<Point, Point>> extremal_pairs(const Point& a, double r,
                                                              double eps) const;

  /// Global smooth coordinates, for the spaces that have them.
  virtual std::optional<std::vector<double>> chart(const Point& p) const;

  /// Inverse of chart(). Throws DomainError where no chart exists.
  virtual Point from_chart(std::span<const double> coords) const;
};

/// Cheap, shareable handle to an immutable space.
class Space {
 public:
  explicit Space(std::shared_ptr<const GeodesicSpace> impl);

  const GeodesicSpace& impl() const noexcept { return *impl_; }
  const GeodesicSpace* operator->() const noexcept { return impl_.get(); }

  SpaceKind kind() const noexcept { return impl_->kind(); }
  std::string name() const { return impl_->name(); }

  /// Throws DomainError if p does not belong to this space.
  void check(const Point& p) const { impl_->validate(p); }

 private:
  std::shared_ptr<const GeodesicSpace> impl_;
};

double distance(const Space& space, const Point& x, const Point& y);
long double squared_distance(const Space& space, const Point& x, const Point& y);
Point midpoint(const Space& space, const Point& x, const Point& y);

/// Throws DomainError for t outside [0, 1].
Point geodesic_point(const Space& space, const Point& x, const Point& y, double t);

Modulus modulus(const Space& space);

}  // namespace geobary

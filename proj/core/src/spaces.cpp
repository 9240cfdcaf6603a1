#include "geobary/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "geobary/error.hpp"

namespace geobary {

namespace {

using Real = long double;

class ConcreteSpace : public GeodesicSpace {
 public:
  virtual SpaceDescriptor descriptor() const = 0;
};

void require_kind(const Point& p, SpaceKind kind) {
  if (p.kind() != kind) {
    throw DomainError("point of kind " + std::string(to_string(p.kind())) +
                      " used with a " + std::string(to_string(kind)) + " space");
  }
}

Modulus cat0_modulus() {
  return Modulus("eps^2/8", [](double, double eps) { return eps * eps / 8.0; }, false, true);
}

// Affine interpolation used by the two normed spaces.
std::vector<double> lerp(std::span<const double> x, std::span<const double> y, double t) {
  std::vector<double> out(x.size());
  const Real tt = t;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = static_cast<double>((1.0L - tt) * x[i] + tt * y[i]);
  }
  return out;
}

std::vector<double> midpoint_coords(std::span<const double> x, std::span<const double> y) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = static_cast<double>((static_cast<Real>(x[i]) + y[i]) * 0.5L);
  }
  return out;
}

// ---------------------------------------------------------------------------

class EuclideanSpace final : public ConcreteSpace {
 public:
  explicit EuclideanSpace(std::size_t dim) : dim_(dim) {}

  SpaceKind kind() const noexcept override { return SpaceKind::euclidean; }
  std::string name() const override { return "euclidean(" + std::to_string(dim_) + ")"; }
  bool is_cat0() const noexcept override { return true; }
  SpaceDescriptor descriptor() const override {
    return {.kind = SpaceKind::euclidean, .dim = dim_};
  }

  void validate(const Point& p) const override {
    require_kind(p, SpaceKind::euclidean);
    if (p.coords().size() != dim_) {
      throw DomainError("euclidean point has " + std::to_string(p.coords().size()) +
                        " coordinates, space dimension is " + std::to_string(dim_));
    }
  }

  std::optional<std::vector<double>> chart(const Point& p) const override {
    return std::vector<double>(p.coords().begin(), p.coords().end());
  }
  Point from_chart(std::span<const double> c) const override {
    return Point::euclidean(std::vector<double>(c.begin(), c.end()));
  }

  Real squared_distance(const Point& x, const Point& y) const override {
    Real sum = 0.0L;
    const auto a = x.coords();
    const auto b = y.coords();
    for (std::size_t i = 0; i < dim_; ++i) {
      const Real d = static_cast<Real>(a[i]) - b[i];
      sum += d * d;
    }
    return sum;
  }

  Point geodesic_point(const Point& x, const Point& y, double t) const override {
    if (t == 0.0) return x;
    if (t == 1.0) return y;
    return Point::euclidean(lerp(x.coords(), y.coords(), t));
  }

  Point midpoint(const Point& x, const Point& y) const override {
    return Point::euclidean(midpoint_coords(x.coords(), y.coords()));
  }

  Modulus modulus() const override { return cat0_modulus(); }

  Point line_point(const Point& base, double s) const override {
    std::vector<double> c(base.coords().begin(), base.coords().end());
    c[0] += s;
    return Point::euclidean(std::move(c));
  }

  Point sample_point(Rng& rng) const override {
    std::vector<double> c(dim_);
    for (auto& v : c) v = rng.uniform(-2.0, 2.0);
    return Point::euclidean(std::move(c));
  }

  Point sample_at_distance(Rng& rng, const Point& a, double rho) const override {
    std::vector<double> u(dim_);
    Real norm2 = 0.0L;
    do {
      norm2 = 0.0L;
      for (auto& v : u) {
        v = rng.normal();
        norm2 += static_cast<Real>(v) * v;
      }
    } while (norm2 < 1e-24L);
    return offset_along(a, u, rho / std::sqrt(norm2));
  }

  Point sample_opposite(Rng&, const Point& a, const Point& x, double rho) const override {
    std::vector<double> u(dim_);
    for (std::size_t i = 0; i < dim_; ++i) u[i] = a.coords()[i] - x.coords()[i];
    return offset_along(a, u, rho / std::sqrt(squared_distance(a, x)));
  }

  std::vector<std::pair<Point, Point>> extremal_pairs(const Point& a, double r,
                                                      double eps) const override {
    auto pairs = GeodesicSpace::extremal_pairs(a, r, eps);
    if (dim_ >= 2) {
      // Both points on the sphere of radius r, chord eps * r.
      const double theta = 2.0 * std::asin(std::min(1.0, eps / 2.0));
      std::vector<double> e1(dim_, 0.0), e2(dim_, 0.0);
      e1[0] = 1.0;
      e2[0] = std::cos(theta);
      e2[1] = std::sin(theta);
      pairs.emplace_back(offset_along(a, e1, r), offset_along(a, e2, r));
    }
    return pairs;
  }

 private:
  Point offset_along(const Point& a, const std::vector<double>& u, Real scale) const {
    std::vector<double> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      c[i] = static_cast<double>(a.coords()[i] + scale * u[i]);
    }
    return Point::euclidean(std::move(c));
  }

  std::size_t dim_;
};

// ---------------------------------------------------------------------------

class LpPlaneSpace final : public ConcreteSpace {
 public:
  explicit LpPlaneSpace(double p) : p_(p) {}

  SpaceKind kind() const noexcept override { return SpaceKind::lp_plane; }
  std::string name() const override { return "lp_plane(p=" + format_p() + ")"; }
  bool is_cat0() const noexcept override { return p_ == 2.0; }
  SpaceDescriptor descriptor() const override { return {.kind = SpaceKind::lp_plane, .p = p_}; }

  void validate(const Point& p) const override {
    require_kind(p, SpaceKind::lp_plane);
    if (p.coords().size() != 2) throw DomainError("lp_plane point must have 2 coordinates");
  }

  std::optional<std::vector<double>> chart(const Point& p) const override {
    return std::vector<double>(p.coords().begin(), p.coords().end());
  }
  Point from_chart(std::span<const double> c) const override {
    return Point::lp_plane(std::vector<double>(c.begin(), c.end()));
  }

  Real squared_distance(const Point& x, const Point& y) const override {
    const Real n = norm(static_cast<Real>(x.coords()[0]) - y.coords()[0],
                        static_cast<Real>(x.coords()[1]) - y.coords()[1]);
    return n * n;
  }

  Point geodesic_point(const Point& x, const Point& y, double t) const override {
    if (t == 0.0) return x;
    if (t == 1.0) return y;
    return Point::lp_plane(lerp(x.coords(), y.coords(), t));
  }

  Point midpoint(const Point& x, const Point& y) const override {
    return Point::lp_plane(midpoint_coords(x.coords(), y.coords()));
  }

  // Clarkson: ||(x+y)/2||^p <= (||x||^p + ||y||^p)/2 - ||(x-y)/2||^p for p >= 2.
  Modulus modulus() const override {
    const double p = p_;
    return Modulus(
        "1 - (1 - (eps/2)^" + format_p() + ")^(1/" + format_p() + ")",
        [p](double, double eps) {
          const double u = std::pow(eps / 2.0, p);
          return -std::expm1(std::log1p(-u) / p);
        },
        false, true);
  }

  Point line_point(const Point& base, double s) const override {
    return Point::lp_plane({base.coords()[0] + s, base.coords()[1]});
  }

  Point sample_point(Rng& rng) const override {
    return Point::lp_plane({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
  }

  Point sample_at_distance(Rng& rng, const Point& a, double rho) const override {
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return offset_along(a, std::cos(phi), std::sin(phi), rho);
  }

  Point sample_opposite(Rng&, const Point& a, const Point& x, double rho) const override {
    return offset_along(a, a.coords()[0] - x.coords()[0], a.coords()[1] - x.coords()[1], rho);
  }

 private:
  Real norm(Real u, Real v) const {
    u = std::fabs(u);
    v = std::fabs(v);
    const Real big = std::max(u, v);
    if (big == 0.0L) return 0.0L;
    const Real small = std::min(u, v) / big;
    return big * std::pow(1.0L + std::pow(small, static_cast<Real>(p_)), 1.0L / p_);
  }

  Point offset_along(const Point& a, double ux, double uy, double rho) const {
    const Real scale = rho / norm(ux, uy);
    return Point::lp_plane({static_cast<double>(a.coords()[0] + scale * ux),
                            static_cast<double>(a.coords()[1] + scale * uy)});
  }

  std::string format_p() const {
    std::string s = std::to_string(p_);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  double p_;
};

// ---------------------------------------------------------------------------

using Vec3 = std::array<Real, 3>;

Vec3 to_vec(const Point& p) {
  const auto c = p.coords();
  return {c[0], c[1], c[2]};
}

Real lorentz(const Vec3& a, const Vec3& b) { return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 axpby(Real alpha, const Vec3& a, Real beta, const Vec3& b) {
  return {alpha * a[0] + beta * b[0], alpha * a[1] + beta * b[1], alpha * a[2] + beta * b[2]};
}

// Rescales a future-pointing timelike vector onto the sheet.
Point to_sheet(const Vec3& v) {
  const Real q = -lorentz(v, v);
  if (!(q > 0.0L) || !(v[0] > 0.0L)) throw DomainError("hyperbolic: vector left the sheet");
  const Real s = 1.0L / std::sqrt(q);
  const std::array<double, 3> c{static_cast<double>(v[0] * s), static_cast<double>(v[1] * s),
                                static_cast<double>(v[2] * s)};
  return Point::hyperbolic(c);
}

// Orthonormal basis of the tangent plane at a.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& a) {
  Vec3 u1 = axpby(1.0L, {0.0L, 1.0L, 0.0L}, a[1], a);
  u1 = axpby(1.0L / std::sqrt(lorentz(u1, u1)), u1, 0.0L, u1);
  Vec3 u2 = axpby(1.0L, {0.0L, 0.0L, 1.0L}, a[2], a);
  u2 = axpby(1.0L, u2, -lorentz(u2, u1), u1);
  u2 = axpby(1.0L / std::sqrt(lorentz(u2, u2)), u2, 0.0L, u2);
  return {u1, u2};
}

Point hyperbolic_exp(const Vec3& a, const Vec3& unit_tangent, Real rho) {
  const Vec3 v = axpby(std::cosh(rho), a, std::sinh(rho), unit_tangent);
  return Point::hyperbolic_lift(static_cast<double>(v[1]), static_cast<double>(v[2]));
}

Real hyperbolic_dist(const Vec3& x, const Vec3& y) {
  // acosh(-<x,y>) loses everything for nearby points; there the form
  // 2 asinh(|x - y|_L / 2) is used, which is exactly zero for x = y.
  const Real b = -lorentz(x, y);
  if (b >= 2.0L) return std::acosh(b);
  const Vec3 d = axpby(1.0L, x, -1.0L, y);
  const Real q = std::max(0.0L, lorentz(d, d));
  return 2.0L * std::asinh(std::sqrt(q) / 2.0L);
}

class HyperbolicSpace final : public ConcreteSpace {
 public:
  SpaceKind kind() const noexcept override { return SpaceKind::hyperbolic; }
  std::string name() const override { return "hyperbolic"; }
  bool is_cat0() const noexcept override { return true; }
  SpaceDescriptor descriptor() const override { return {.kind = SpaceKind::hyperbolic}; }

  void validate(const Point& p) const override {
    require_kind(p, SpaceKind::hyperbolic);
    const auto c = p.coords();
    if (c.size() != 3) throw DomainError("hyperbolic point must have 3 coordinates");
    const Vec3 v = to_vec(p);
    const Real drift = std::fabs(lorentz(v, v) + 1.0L) / std::max(1.0L, v[0] * v[0]);
    if (drift > 1e-9L || !(c[0] > 0.0)) throw DomainError("hyperbolic point off the sheet");
  }

  // Spatial coordinates (x1, x2) of the hyperboloid.
  std::optional<std::vector<double>> chart(const Point& p) const override {
    return std::vector<double>{p.coords()[1], p.coords()[2]};
  }
  Point from_chart(std::span<const double> c) const override {
    if (c.size() != 2) throw DomainError("hyperbolic chart has 2 coordinates");
    return Point::hyperbolic_lift(c[0], c[1]);
  }

  Real squared_distance(const Point& x, const Point& y) const override {
    const Real d = hyperbolic_dist(to_vec(x), to_vec(y));
    return d * d;
  }

  Point geodesic_point(const Point& x, const Point& y, double t) const override {
    return hyperbolic_geodesic(x, y, t);
  }

  Point midpoint(const Point& x, const Point& y) const override {
    if (x == y) return x;
    return to_sheet(axpby(1.0L, to_vec(x), 1.0L, to_vec(y)));
  }

  Modulus modulus() const override { return cat0_modulus(); }

  Point line_point(const Point& base, double s) const override {
    const Vec3 b = to_vec(base);
    return hyperbolic_exp(b, tangent_basis(b).first, s);
  }

  // -<line(s), y> = cosh(s) A + sinh(s) B; evaluated in log form once
  // cosh(s) would overflow the ambient coordinates.
  double line_distance(const Point& base, double s, const Point& y) const override {
    if (std::fabs(s) < 300.0) return GeodesicSpace::line_distance(base, s, y);
    const Vec3 b = to_vec(base);
    const Vec3 u = tangent_basis(b).first;
    const Vec3 w = to_vec(y);
    const Real a = -lorentz(b, w);
    const Real bb = (s > 0 ? -1.0L : 1.0L) * lorentz(u, w);
    const Real abs_s = std::fabs(static_cast<Real>(s));
    const Real log_z = abs_s + std::log((a + bb) / 2.0L) +
                       std::log1p(std::exp(-2.0L * abs_s) * (a - bb) / (a + bb));
    return static_cast<double>(std::log(2.0L) + log_z);
  }

  Point sample_point(Rng& rng) const override {
    const Real rho = rng.uniform(0.0, 2.0);
    const Real phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return to_sheet({std::cosh(rho), std::sinh(rho) * std::cos(phi), std::sinh(rho) * std::sin(phi)});
  }

  Point sample_at_distance(Rng& rng, const Point& a, double rho) const override {
    const Vec3 av = to_vec(a);
    const auto [u1, u2] = tangent_basis(av);
    const Real phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return hyperbolic_exp(av, axpby(std::cos(phi), u1, std::sin(phi), u2), rho);
  }

  Point sample_opposite(Rng&, const Point& a, const Point& x, double rho) const override {
    const Vec3 av = to_vec(a);
    const Vec3 xv = to_vec(x);
    Vec3 v = axpby(1.0L, xv, lorentz(av, xv), av);
    v = axpby(-1.0L / std::sqrt(lorentz(v, v)), v, 0.0L, v);
    return hyperbolic_exp(av, v, rho);
  }

  std::vector<std::pair<Point, Point>> extremal_pairs(const Point& a, double r,
                                                      double eps) const override {
    auto pairs = GeodesicSpace::extremal_pairs(a, r, eps);
    if (r < 300.0) {
      // Hyperbolic law of cosines: cosh(eps r) = cosh^2 r - sinh^2 r cos(theta).
      const Real rr = r;
      const Real sh = std::sinh(rr);
      const Real cos_theta =
          std::clamp((std::cosh(rr) * std::cosh(rr) - std::cosh(eps * rr)) / (sh * sh), -1.0L, 1.0L);
      const Real sin_theta = std::sqrt(std::max(0.0L, 1.0L - cos_theta * cos_theta));
      const Vec3 av = to_vec(a);
      const auto [u1, u2] = tangent_basis(av);
      pairs.emplace_back(hyperbolic_exp(av, u1, rr),
                         hyperbolic_exp(av, axpby(cos_theta, u1, sin_theta, u2), rr));
    }
    return pairs;
  }
};

// ---------------------------------------------------------------------------

class StarTreeSpace final : public ConcreteSpace {
 public:
  explicit StarTreeSpace(std::size_t rays) : rays_(rays) {}

  SpaceKind kind() const noexcept override { return SpaceKind::star_tree; }
  std::string name() const override { return "star_tree(" + std::to_string(rays_) + ")"; }
  bool is_cat0() const noexcept override { return true; }
  SpaceDescriptor descriptor() const override {
    return {.kind = SpaceKind::star_tree, .rays = rays_};
  }

  void validate(const Point& p) const override {
    require_kind(p, SpaceKind::star_tree);
    if (p.tree().ray >= rays_) {
      throw DomainError("tree ray index " + std::to_string(p.tree().ray) + " >= ray count " +
                        std::to_string(rays_));
    }
  }

  Real squared_distance(const Point& x, const Point& y) const override {
    const Real d = tree_dist(x.tree(), y.tree());
    return d * d;
  }

  double distance(const Point& x, const Point& y) const override {
    return static_cast<double>(tree_dist(x.tree(), y.tree()));
  }

  Point geodesic_point(const Point& x, const Point& y, double t) const override {
    return tree_geodesic(rays_, x, y, t);
  }

  Modulus modulus() const override { return cat0_modulus(); }

  Point line_point(const Point& base, double s) const override {
    const auto [ray, off] = base.tree();
    if (s >= 0.0) return Point::tree(ray, off + s);
    const double back = -s;
    if (back <= off) return Point::tree(ray, off - back);
    return Point::tree((ray + 1) % rays_, back - off);
  }

  Point sample_point(Rng& rng) const override {
    if (rng.bernoulli(0.1)) return Point::tree(0, 0.0);
    const std::size_t ray = rng.index(rays_);
    return Point::tree(ray, rng.uniform(0.0, 2.0));
  }

  Point sample_at_distance(Rng& rng, const Point& a, double rho) const override {
    const auto [ray, off] = a.tree();
    std::vector<Point> options;
    options.push_back(Point::tree(ray, off + rho));
    if (rho <= off) {
      options.push_back(Point::tree(ray, off - rho));
    } else {
      for (std::size_t i = 0; i < rays_; ++i) {
        if (i != ray) options.push_back(Point::tree(i, rho - off));
      }
    }
    return options[rng.index(options.size())];
  }

  Point sample_opposite(Rng& rng, const Point& a, const Point& x, double rho) const override {
    const auto [ray, off] = a.tree();
    const auto& xt = x.tree();
    if (off == 0.0) {
      // From the hub every ray other than x's continues the geodesic.
      std::size_t i = rng.index(rays_ - 1);
      if (i >= xt.ray) ++i;
      return Point::tree(i, rho);
    }
    const bool x_above = xt.ray == ray && xt.offset > off;
    if (!x_above) return Point::tree(ray, off + rho);
    if (rho <= off) return Point::tree(ray, off - rho);
    std::size_t i = rng.index(rays_ - 1);
    if (i >= ray) ++i;
    return Point::tree(i, rho - off);
  }

 private:
  static Real tree_dist(const TreePoint& x, const TreePoint& y) {
    if (x.ray == y.ray) return std::fabs(static_cast<Real>(x.offset) - y.offset);
    return static_cast<Real>(x.offset) + y.offset;
  }

  std::size_t rays_;
};

// ---------------------------------------------------------------------------

class FaultyMidpointSpace final : public GeodesicSpace {
 public:
  explicit FaultyMidpointSpace(Space inner) : inner_(std::move(inner)) {}

  SpaceKind kind() const noexcept override { return inner_.kind(); }
  std::string name() const override { return "faulty_midpoint(" + inner_.name() + ")"; }
  bool is_cat0() const noexcept override { return inner_->is_cat0(); }
  void validate(const Point& p) const override { inner_->validate(p); }
  Real squared_distance(const Point& x, const Point& y) const override {
    return inner_->squared_distance(x, y);
  }
  double distance(const Point& x, const Point& y) const override {
    return inner_->distance(x, y);
  }
  Point geodesic_point(const Point& x, const Point& y, double t) const override {
    return inner_->geodesic_point(x, y, t);
  }
  Point midpoint(const Point& x, const Point&) const override { return x; }
  Modulus modulus() const override { return inner_->modulus(); }
  Point line_point(const Point& base, double s) const override {
    return inner_->line_point(base, s);
  }
  double line_distance(const Point& base, double s, const Point& y) const override {
    return inner_->line_distance(base, s, y);
  }
  Point sample_point(Rng& rng) const override { return inner_->sample_point(rng); }
  Point sample_at_distance(Rng& rng, const Point& a, double rho) const override {
    return inner_->sample_at_distance(rng, a, rho);
  }
  Point sample_opposite(Rng& rng, const Point& a, const Point& x, double rho) const override {
    return inner_->sample_opposite(rng, a, x, rho);
  }
  std::vector<std::pair<Point, Point>> extremal_pairs(const Point& a, double r,
                                                      double eps) const override {
    return inner_->extremal_pairs(a, r, eps);
  }

 private:
  Space inner_;
};

}  // namespace

Space make_euclidean(std::size_t dim) {
  if (dim < 1) throw ConfigError("euclidean space: dim must be >= 1");
  return Space(std::make_shared<EuclideanSpace>(dim));
}

Space make_hyperbolic() { return Space(std::make_shared<HyperbolicSpace>()); }

Space make_star_tree(std::size_t rays) {
  if (rays < 2) throw ConfigError("star_tree: rays must be >= 2");
  return Space(std::make_shared<StarTreeSpace>(rays));
}

Space make_lp_plane(double p) {
  if (!std::isfinite(p) || p < 2.0) throw ConfigError("lp_plane: p must be a finite real >= 2");
  return Space(std::make_shared<LpPlaneSpace>(p));
}

Space make_space(const SpaceDescriptor& d) {
  switch (d.kind) {
    case SpaceKind::euclidean:
      return make_euclidean(d.dim);
    case SpaceKind::hyperbolic:
      return make_hyperbolic();
    case SpaceKind::star_tree:
      return make_star_tree(d.rays);
    case SpaceKind::lp_plane:
      return make_lp_plane(d.p);
  }
  throw ConfigError("unknown space kind");
}

std::optional<SpaceDescriptor> descriptor_of(const Space& space) {
  if (const auto* c = dynamic_cast<const ConcreteSpace*>(&space.impl())) return c->descriptor();
  return std::nullopt;
}

Space make_faulty_midpoint_space(Space inner) {
  return Space(std::make_shared<FaultyMidpointSpace>(std::move(inner)));
}

Point hyperbolic_geodesic(const Point& x, const Point& y, double t) {
  require_kind(x, SpaceKind::hyperbolic);
  require_kind(y, SpaceKind::hyperbolic);
  HyperbolicSpace{}.validate(x);
  HyperbolicSpace{}.validate(y);
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("hyperbolic_geodesic: t outside [0, 1]");
  if (t == 0.0) return x;
  if (t == 1.0) return y;
  const Vec3 xv = to_vec(x);
  const Vec3 yv = to_vec(y);
  const Real d = hyperbolic_dist(xv, yv);
  if (d == 0.0L) return x;
  // cosh(td) x + sinh(td) u expanded in x and y; no cancellation for small d.
  const Real sd = std::sinh(d);
  return to_sheet(axpby(std::sinh((1.0L - t) * d) / sd, xv, std::sinh(t * d) / sd, yv));
}

Point tree_geodesic(std::size_t rays, const Point& x, const Point& y, double t) {
  require_kind(x, SpaceKind::star_tree);
  require_kind(y, SpaceKind::star_tree);
  if (x.tree().ray >= rays || y.tree().ray >= rays) {
    throw DomainError("tree_geodesic: ray index >= ray count");
  }
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("tree_geodesic: t outside [0, 1]");
  if (t == 0.0) return x;
  if (t == 1.0) return y;
  const auto& a = x.tree();
  const auto& b = y.tree();
  if (a.ray == b.ray) {
    return Point::tree(a.ray, static_cast<double>((1.0L - t) * a.offset +
                                                  static_cast<Real>(t) * b.offset));
  }
  const Real s = static_cast<Real>(t) * (static_cast<Real>(a.offset) + b.offset);
  if (s <= a.offset) return Point::tree(a.ray, static_cast<double>(a.offset - s));
  return Point::tree(b.ray, static_cast<double>(s - a.offset));
}

}  // namespace geobary

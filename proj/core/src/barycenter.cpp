#include "geobary/barycenter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "geobary/convexity.hpp"

namespace geobary {

namespace {

using Real = long double;

Real anchor_sum(const Space& space, const Measure& measure, const Point& anchor) {
  Real sum = 0.0L;
  for (std::size_t i = 0; i < measure.size(); ++i) {
    sum += measure.weight(i) * space->squared_distance(measure.atom(i), anchor);
  }
  return sum;
}

// Weighted mean built by successive geodesic interpolation; exact in
// normed spaces, an approximation elsewhere. Used as an extra search target.
Point sequential_geodesic_average(const Space& space, const Measure& measure) {
  Point acc = measure.atom(0);
  Real mass = measure.weight(0);
  for (std::size_t i = 1; i < measure.size(); ++i) {
    mass += measure.weight(i);
    acc = space->geodesic_point(acc, measure.atom(i), static_cast<double>(measure.weight(i) / mass));
  }
  return acc;
}

struct RunOutcome {
  Point point;
  std::size_t cycles;
  bool converged;
};

// Damped Newton on g in a global chart, with central differences evaluated
// in extended precision. Steps are accepted only on a strict decrease of g.
class ChartNewton {
 public:
  ChartNewton(const Space& space, const Measure& measure, double tol)
      : space_(space), measure_(measure), tol_(tol) {}

  Point polish(Point p) const {
    const auto start = space_->chart(p);
    if (!start) return p;
    std::vector<double> c = *start;
    const std::size_t n = c.size();
    auto G = [&](const std::vector<double>& v) { return g_extended(space_, measure_, space_->from_chart(v)); };
    Real gc = G(c);
    std::vector<Real> grad(n);
    std::vector<Real> hess(n * n);
    for (int iter = 0; iter < 100; ++iter) {
      double scale = 1.0;
      for (double v : c) scale = std::max(scale, std::fabs(v));
      const double h = 1e-5 * scale;
      auto shifted = [&](std::size_t i, double di, std::size_t j, double dj) {
        std::vector<double> v = c;
        v[i] += di;
        v[j] += dj;
        return G(v);
      };
      for (std::size_t i = 0; i < n; ++i) {
        const Real up = shifted(i, h, i, 0.0);
        const Real down = shifted(i, -h, i, 0.0);
        grad[i] = (up - down) / (2.0L * h);
        hess[i * n + i] = (up - 2.0L * gc + down) / (static_cast<Real>(h) * h);
        for (std::size_t j = 0; j < i; ++j) {
          const Real v = (shifted(i, h, j, h) - shifted(i, h, j, -h) - shifted(i, -h, j, h) +
                          shifted(i, -h, j, -h)) /
                         (4.0L * h * h);
          hess[i * n + j] = v;
          hess[j * n + i] = v;
        }
      }
      const std::vector<Real> dir = newton_direction(hess, grad, n);
      double t = 1.0;
      bool moved = false;
      Real step_norm = 0.0L;
      for (int halving = 0; halving < 40 && !moved; ++halving, t *= 0.5) {
        std::vector<double> cand(n);
        for (std::size_t i = 0; i < n; ++i) cand[i] = static_cast<double>(c[i] + t * dir[i]);
        const Real gv = G(cand);
        if (gv < gc) {
          step_norm = 0.0L;
          for (std::size_t i = 0; i < n; ++i) step_norm = std::max<Real>(step_norm, std::fabs(cand[i] - c[i]));
          c = std::move(cand);
          gc = gv;
          moved = true;
        }
      }
      if (!moved || step_norm < tol_ * 1e-3) break;
    }
    return space_->from_chart(c);
  }

 private:
  // Solves H d = -grad by Cholesky; falls back to a scaled gradient step
  // when H is not positive definite.
  static std::vector<Real> newton_direction(std::vector<Real> H, const std::vector<Real>& grad,
                                            std::size_t n) {
    bool spd = true;
    for (std::size_t j = 0; j < n && spd; ++j) {
      Real diag = H[j * n + j];
      for (std::size_t k = 0; k < j; ++k) diag -= H[j * n + k] * H[j * n + k];
      if (!(diag > 0.0L)) {
        spd = false;
        break;
      }
      const Real l = std::sqrt(diag);
      H[j * n + j] = l;
      for (std::size_t i = j + 1; i < n; ++i) {
        Real v = H[i * n + j];
        for (std::size_t k = 0; k < j; ++k) v -= H[i * n + k] * H[j * n + k];
        H[i * n + j] = v / l;
      }
    }
    std::vector<Real> d(n);
    if (!spd) {
      for (std::size_t i = 0; i < n; ++i) d[i] = -grad[i] / 2.0L;
      return d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Real v = -grad[i];
      for (std::size_t k = 0; k < i; ++k) v -= H[i * n + k] * d[k];
      d[i] = v / H[i * n + i];
    }
    for (std::size_t i = n; i-- > 0;) {
      Real v = d[i];
      for (std::size_t k = i + 1; k < n; ++k) v -= H[k * n + i] * d[k];
      d[i] = v / H[i * n + i];
    }
    return d;
  }

  const Space& space_;
  const Measure& measure_;
  double tol_;
};

class CyclicGeodesicSearch {
 public:
  CyclicGeodesicSearch(const Space& space, const Measure& measure, double tol)
      : space_(space),
        measure_(measure),
        tol_(tol),
        target_(sequential_geodesic_average(space, measure)),
        newton_(space, measure, tol),
        has_chart_(space->chart(measure.atom(0)).has_value()) {}

  RunOutcome run(Point start, std::size_t max_cycles) const {
    constexpr std::size_t kPolishEvery = 25;
    Point p = std::move(start);
    Real gp = g_extended(space_, measure_, p);
    bool just_polished = false;
    for (std::size_t cycle = 1; cycle <= max_cycles; ++cycle) {
      const Point cycle_start = p;
      for (const Point& y : measure_.atoms()) line_search(p, gp, y);
      line_search(p, gp, target_);
      const bool small = space_->distance(cycle_start, p) < tol_;
      if (has_chart_ && !just_polished && (small || cycle % kPolishEvery == 0)) {
        p = newton_.polish(std::move(p));
        gp = g_extended(space_, measure_, p);
        just_polished = true;
        continue;
      }
      if (small) return {std::move(p), cycle, true};
      just_polished = false;
    }
    return {std::move(p), max_cycles, false};
  }

 private:
  // Golden-section search for min g on the geodesic [p, target]. g restricted
  // to a geodesic is continuous and midpoint quasi-convex, hence unimodal.
  // The iterate moves only on a strict decrease of g.
  void line_search(Point& p, Real& gp, const Point& target) const {
    const double length = space_->distance(p, target);
    if (length == 0.0) return;
    auto phi = [&](double t) { return g_extended(space_, measure_, space_->geodesic_point(p, target, t)); };

    constexpr double kInvPhi = 0.6180339887498948482;
    double best_t = 0.0;
    Real best = gp;
    auto note = [&](double t, Real v) {
      if (v < best) {
        best = v;
        best_t = t;
      }
    };
    note(1.0, phi(1.0));

    double lo = 0.0;
    double hi = 1.0;
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    Real fc = phi(c);
    Real fd = phi(d);
    note(c, fc);
    note(d, fd);
    const double width = std::max(tol_ * 1e-3 / length, 1e-15);
    for (int iter = 0; iter < 200 && (hi - lo) > width; ++iter) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - kInvPhi * (hi - lo);
        fc = phi(c);
        note(c, fc);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + kInvPhi * (hi - lo);
        fd = phi(d);
        note(d, fd);
      }
    }
    if (best < gp) {
      p = space_->geodesic_point(p, target, best_t);
      gp = best;
    }
  }

  const Space& space_;
  const Measure& measure_;
  double tol_;
  Point target_;
  ChartNewton newton_;
  bool has_chart_;
};

}  // namespace

Objective::Objective(Space space, Measure measure, Point anchor)
    : space_(std::move(space)), measure_(std::move(measure)), anchor_(std::move(anchor)) {
  space_.check(anchor_);
  for (const auto& a : measure_.atoms()) space_.check(a);
  offset_ = anchor_sum(space_, measure_, anchor_);
}

double Objective::operator()(const Point& x) const {
  space_.check(x);
  return static_cast<double>(g_extended(space_, measure_, x) - offset_);
}

double f(const Objective& objective, const Point& x) { return objective(x); }

long double g_extended(const Space& space, const Measure& measure, const Point& x) {
  Real sum = 0.0L;
  for (std::size_t i = 0; i < measure.size(); ++i) {
    sum += measure.weight(i) * space->squared_distance(x, measure.atom(i));
  }
  return sum;
}

double g(const Space& space, const Measure& measure, const Point& x) {
  space.check(x);
  for (const auto& a : measure.atoms()) space.check(a);
  return static_cast<double>(g_extended(space, measure, x));
}

QuasiConvexityCertificate quasiconvexity_certificate(const Objective& obj, const Point& x0,
                                                     const Point& z0) {
  const Space& space = obj.space();
  space.check(x0);
  space.check(z0);
  if (x0 == z0 || space->distance(x0, z0) == 0.0) {
    throw DomainError("quasiconvexity_certificate: x0 and z0 must be distinct");
  }
  const Measure& P = obj.measure();
  const Point& a = obj.anchor();
  const Point m = space->midpoint(x0, z0);

  const Real offset = anchor_sum(space, P, a);
  const Real f_x0 = g_extended(space, P, x0) - offset;
  const Real f_z0 = g_extended(space, P, z0) - offset;
  const Real f_mid = g_extended(space, P, m) - offset;
  Real def = 0.0L;
  for (std::size_t i = 0; i < P.size(); ++i) {
    def += P.weight(i) * static_cast<Real>(deficiency_raw(space, Triple{P.atom(i), x0, z0}));
  }
  const Real f_max = std::max(f_x0, f_z0);
  const Real residual = f_mid - (0.5L * (f_x0 + f_z0) - def);

  // Any closed ball B(a, R) with positive mass works; try every atom radius
  // and keep the tightest bound.
  const double d_x0z0 = space->distance(x0, z0);
  const double reach = std::max(space->distance(x0, a), space->distance(z0, a));
  std::vector<double> radii(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) radii[i] = space->distance(a, P.atom(i));
  QuasiConvexityCertificate best{};
  best.bound = -1.0;
  for (double R : radii) {
    double mass = 0.0;
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (radii[i] <= R) mass += P.weight(i);
    }
    const double s = reach + R;
    const double eps_arg = std::min(2.0, d_x0z0 * d_x0z0 / (2.0 * s * s));
    const double phi = phi_lower_bound(space, s, eps_arg).value;
    if (mass * phi > best.bound) {
      best.radius = R;
      best.ball_mass = mass;
      best.s = s;
      best.eps_arg = eps_arg;
      best.phi_lower = phi;
      best.bound = mass * phi;
    }
  }

  best.f_mid = static_cast<double>(f_mid);
  best.f_x0 = static_cast<double>(f_x0);
  best.f_z0 = static_cast<double>(f_z0);
  best.f_max = static_cast<double>(f_max);
  best.deficiency_integral = static_cast<double>(def);
  best.identity_residual = static_cast<double>(residual);
  best.gap = static_cast<double>(f_max - f_mid);
  best.identity_holds = std::fabs(best.identity_residual) <= 1e-9;
  best.chain_holds = best.identity_holds && f_mid <= f_max - best.bound + 1e-9L;
  return best;
}

CoercivityReport coercivity_probe(const Objective& obj, const Point& base,
                                  std::span<const double> radii) {
  obj.space().check(base);
  if (radii.size() < 2) throw PreconditionError("coercivity_probe: need at least two radii");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] >= 0.0) || !std::isfinite(radii[k]) || (k > 0 && !(radii[k] > radii[k - 1]))) {
      throw PreconditionError("coercivity_probe: radii must be nonnegative and strictly increasing");
    }
  }
  const Space& space = obj.space();
  const Measure& P = obj.measure();
  const Real offset = anchor_sum(space, P, obj.anchor());
  CoercivityReport rep;
  rep.radii.assign(radii.begin(), radii.end());
  for (double t : radii) {
    Real sum = 0.0L;
    for (std::size_t i = 0; i < P.size(); ++i) {
      const Real d = space->line_distance(base, t, P.atom(i));
      sum += P.weight(i) * d * d;
    }
    rep.values.push_back(static_cast<double>(sum - offset));
  }
  std::size_t k0 = rep.values.size() - 1;
  while (k0 > 0 && rep.values[k0 - 1] < rep.values[k0]) --k0;
  rep.increasing_from = k0;
  rep.eventually_increasing = k0 + 1 < rep.values.size();
  const double prior = *std::max_element(rep.values.begin(), rep.values.end() - 1);
  rep.exceeds_prior_max = rep.values.back() > prior;
  rep.pass = rep.eventually_increasing && rep.exceeds_prior_max;
  return rep;
}

Point inductive_mean(const Space& space, const Measure& measure, std::size_t iterations,
                     std::uint64_t seed) {
  if (iterations < 1) throw DomainError("inductive_mean: iterations must be >= 1");
  for (const auto& a : measure.atoms()) space.check(a);
  Rng rng(seed);
  Point s = measure.atom(sample_atom(measure, rng));
  for (std::size_t k = 1; k < iterations; ++k) {
    const Point& y = measure.atom(sample_atom(measure, rng));
    s = space->geodesic_point(s, y, 1.0 / static_cast<double>(k + 1));
  }
  return s;
}

double default_tolerance(const Space& space) {
  switch (space.kind()) {
    case SpaceKind::euclidean:
    case SpaceKind::lp_plane:
      return 1e-8;
    case SpaceKind::hyperbolic:
    case SpaceKind::star_tree:
      return 1e-6;
  }
  return 1e-6;
}

BarycenterResult solve(const Space& space, const Measure& measure, const Point& anchor,
                       const SolveOptions& options) {
  const double tol = options.tol.value_or(default_tolerance(space));
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("solve: tol must be positive");
  const Objective objective(space, measure, anchor);
  const CyclicGeodesicSearch search(space, measure, tol);
  const std::size_t warm = std::max<std::size_t>(1, options.warm_start_iterations);

  const std::uint64_t seeds[2] = {options.seed, mix_seed(options.seed ^ 0x5bd1e995ULL)};
  RunOutcome runs[2] = {
      search.run(inductive_mean(space, measure, warm, seeds[0]), options.max_cycles),
      search.run(inductive_mean(space, measure, warm, seeds[1]), options.max_cycles),
  };
  if (!runs[0].converged || !runs[1].converged) {
    throw ConvergenceError("solve: cycle budget of " + std::to_string(options.max_cycles) +
                               " exhausted",
                           runs[0].point, runs[1].point);
  }
  const double gap = space->distance(runs[0].point, runs[1].point);
  if (gap > 2.0 * tol) {
    throw ConvergenceError("solve: independent runs disagree by " + std::to_string(gap) +
                               " > 2 tol",
                           runs[0].point, runs[1].point);
  }
  const double f0 = objective(runs[0].point);
  const double f1 = objective(runs[1].point);
  const int pick = (f1 < f0 - 1e-12) ? 1 : 0;
  const RunOutcome& chosen = runs[pick];
  return BarycenterResult{
      .point = chosen.point,
      .objective_value = pick == 0 ? f0 : f1,
      .g_value = g(space, measure, chosen.point),
      .iterations = chosen.cycles,
      .tol = tol,
      .certificate = {runs[1 - pick].point, gap},
  };
}

}  // namespace geobary

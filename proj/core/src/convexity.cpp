#include "geobary/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "geobary/error.hpp"
#include "geobary/json_io.hpp"

namespace geobary {

using nlohmann::json;

namespace {

void require_params(double r, double eps) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("r must be a positive real");
  if (!(eps > 0.0) || eps > 2.0) throw DomainError("eps must lie in (0, 2]");
}

void check_triple(const Space& space, const Triple& t) {
  space.check(t.a);
  space.check(t.x);
  space.check(t.y);
}

}  // namespace

json to_json(const Triple& t) {
  return {{"a", to_json(t.a)}, {"x", to_json(t.x)}, {"y", to_json(t.y)}};
}

double deficiency_raw(const Space& space, const Triple& t) {
  check_triple(space, t);
  const Point m = space->midpoint(t.x, t.y);
  const long double s = 0.5L * space->squared_distance(t.x, t.a) +
                        0.5L * space->squared_distance(t.y, t.a) -
                        space->squared_distance(m, t.a);
  return static_cast<double>(s);
}

double deficiency(const Space& space, const Triple& t) {
  const double s = deficiency_raw(space, t);
  if (s >= 0.0) return s;
  const long double scale =
      std::max(1.0L, space->squared_distance(t.x, t.a) + space->squared_distance(t.y, t.a));
  if (s < -1e-12L * scale) {
    throw DomainError("deficiency: S = " + std::to_string(s) +
                      " < 0, the metric is not convex at this triple");
  }
  return 0.0;
}

bool in_constraint_set(const Space& space, double r, double eps, const Triple& t, double slack) {
  require_params(r, eps);
  check_triple(space, t);
  const double tol = slack * std::max(1.0, r);
  return space->distance(t.x, t.a) <= r + tol && space->distance(t.y, t.a) <= r + tol &&
         space->distance(t.x, t.y) >= eps * r - tol;
}

double phi_euclidean(double r, double eps) { return eps * eps * r * r / 4.0; }

PhiBound phi_lower_bound(const Space& space, double r, double eps) {
  require_params(r, eps);
  if (space.kind() == SpaceKind::euclidean) return {phi_euclidean(r, eps), PhiBoundKind::analytic};
  if (space->is_cat0()) return {phi_euclidean(r, eps), PhiBoundKind::cn_comparison};
  // d(m,a) <= (1 - eta) r with d(x,a) = d(y,a) = r as the worst case.
  const double eta = space->modulus()(r, eps);
  return {r * r * eta * (2.0 - eta), PhiBoundKind::modulus};
}

double phi_lower_bound_for(const Space& space, double r, double eps, const Triple& t) {
  const double nominal = phi_lower_bound(space, r, eps).value;
  const double r_own = std::max(space->distance(t.x, t.a), space->distance(t.y, t.a));
  if (!(r_own > 0.0)) return nominal;
  const double eps_own = std::min(2.0, space->distance(t.x, t.y) / r_own) * (1.0 - 1e-12);
  if (!(eps_own > 0.0)) return nominal;
  return std::min(nominal, phi_lower_bound(space, r_own, eps_own).value);
}

TripleSampler::TripleSampler(Space space, double r, double eps, std::uint64_t seed)
    : TripleSampler(space, r, eps, seed, [&] {
        Rng rng = Rng::stream(seed, 0);
        return space->sample_point(rng);
      }()) {}

TripleSampler::TripleSampler(Space space, double r, double eps, std::uint64_t seed, Point anchor)
    : space_(std::move(space)), r_(r), eps_(eps), seed_(seed), anchor_(std::move(anchor)) {
  require_params(r, eps);
  space_.check(anchor_);
}

Triple TripleSampler::draw(std::uint64_t index) const {
  Rng rng = Rng::stream(seed_, index + 1);
  const auto& sp = space_.impl();
  for (std::size_t attempt = 0; attempt < kAttemptsPerTriple; ++attempt) {
    Triple t{anchor_, anchor_, anchor_};
    if (rng.bernoulli(0.5)) {
      // Uniform-radius proposals inside the ball.
      t.x = sp.sample_at_distance(rng, anchor_, r_ * std::sqrt(rng.uniform()));
      t.y = sp.sample_at_distance(rng, anchor_, r_ * std::sqrt(rng.uniform()));
    } else {
      // Spread proposals: y near the continuation of [x, a] beyond a, which
      // is the only region populated when eps is close to 2.
      const double rho_x = rng.bernoulli(0.5) ? r_ : rng.uniform(eps_ * r_ / 2.0, r_);
      const double lo_y = std::max(0.0, eps_ * r_ - rho_x);
      const double rho_y = rng.bernoulli(0.5) ? r_ : rng.uniform(lo_y, r_);
      t.x = sp.sample_at_distance(rng, anchor_, rho_x);
      t.y = sp.sample_opposite(rng, anchor_, t.x, rho_y);
      if (!rng.bernoulli(0.25)) {
        const double u = rng.uniform();
        const Point z = sp.sample_at_distance(rng, anchor_, rho_y);
        t.y = sp.geodesic_point(t.y, z, u * u * u);
      }
    }
    if (in_constraint_set(space_, r_, eps_, t)) return t;
  }
  throw SamplingError("phi sampler: no triple of A_{r,eps} found in " +
                      std::to_string(kAttemptsPerTriple) + " attempts (r = " + std::to_string(r_) +
                      ", eps = " + std::to_string(eps_) + ")");
}

std::vector<Triple> TripleSampler::extremal() const {
  std::vector<Triple> out;
  for (auto& [x, y] : space_->extremal_pairs(anchor_, r_, eps_)) {
    Triple t{anchor_, std::move(x), std::move(y)};
    if (in_constraint_set(space_, r_, eps_, t)) out.push_back(std::move(t));
  }
  return out;
}

PhiEstimate phi_estimate(const Space& space, double r, double eps, std::size_t samples,
                         std::uint64_t seed) {
  require_params(r, eps);
  if (samples < 1) throw DomainError("phi_estimate: samples must be >= 1");
  const TripleSampler sampler(space, r, eps, seed);
  std::optional<PhiEstimate> best;
  auto consider = [&](Triple t) {
    const double s = deficiency(space, t);
    if (!best || s < best->value) {
      best = PhiEstimate{r, eps, s, std::move(t), samples, seed};
    }
  };
  for (auto& t : sampler.extremal()) consider(std::move(t));
  for (std::size_t i = 0; i < samples; ++i) consider(sampler.draw(i));
  return *best;
}

bool check_phi_inequality(const Space& space, double r, double eps, const Triple& t) {
  if (!in_constraint_set(space, r, eps, t)) {
    throw PreconditionError("check_phi_inequality: triple is not in A_{r,eps}");
  }
  return deficiency_raw(space, t) >= phi_lower_bound_for(space, r, eps, t) - 1e-9;
}

Report phi_monotonicity_report(const Space& space, const MonotonicityParams& p,
                                 std::size_t samples, std::uint64_t seed) {
  if (!(p.r > 0.0 && p.r <= p.s && std::isfinite(p.s))) {
    throw PreconditionError("monotonicity report: need 0 < r <= s");
  }
  if (!(p.eps > 0.0 && p.eps <= p.delta && p.delta <= 2.0)) {
    throw PreconditionError("monotonicity report: need 0 < eps <= delta <= 2");
  }
  const double shrunk = p.eps * p.r / p.s;
  const json params = {{"r", p.r}, {"s", p.s}, {"eps", p.eps}, {"delta", p.delta},
                       {"samples", samples}, {"seed", seed}};
  Report report;

  // Set inclusions, pointwise on sampled members.
  {
    SlackTracker item1("monotonicity_eps_inclusion", 0.0);
    const TripleSampler from(space, p.r, p.delta, seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const Triple t = from.draw(i);
      item1.observe(in_constraint_set(space, p.r, p.eps, t) ? 0.0 : -1.0,
                    [&] { return to_json(t); });
    }
    report.push_back(item1.finish(params));
  }
  {
    SlackTracker item2("monotonicity_radius_inclusion", 0.0);
    const TripleSampler from(space, p.r, p.eps, seed + 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const Triple t = from.draw(i);
      item2.observe(in_constraint_set(space, p.s, shrunk, t) ? 0.0 : -1.0,
                    [&] { return to_json(t); });
    }
    report.push_back(item2.finish(params));
  }

  // The Phi inequalities on the inner-product formula, where they are exact.
  const double rel = 1e-12;
  {
    SlackTracker t("monotonicity_eps_phi_analytic", rel * phi_euclidean(p.r, p.delta));
    t.observe(phi_euclidean(p.r, p.delta) - phi_euclidean(p.r, p.eps));
    report.push_back(t.finish(params));
  }
  {
    SlackTracker t("monotonicity_radius_phi_analytic", rel * phi_euclidean(p.r, p.eps));
    t.observe(phi_euclidean(p.r, p.eps) - phi_euclidean(p.s, shrunk));
    report.push_back(t.finish(params));
  }
  {
    const double floor = phi_euclidean(p.s, shrunk);
    SlackTracker t("monotonicity_joint_phi_analytic", rel * floor);
    constexpr int kGrid = 21;
    for (int i = 0; i < kGrid; ++i) {
      for (int j = 0; j < kGrid; ++j) {
        const double r1 = p.r + (p.s - p.r) * i / (kGrid - 1);
        const double e1 = p.eps + (2.0 - p.eps) * j / (kGrid - 1);
        t.observe(phi_euclidean(r1, e1) - floor, [&] { return json{{"r1", r1}, {"eps1", e1}}; });
      }
    }
    report.push_back(t.finish(params));
  }

  // Sampled surrogate: members of the smaller sets clear the lower bound of
  // Phi on the larger set.
  {
    const double bound = phi_lower_bound(space, p.r, p.eps).value;
    SlackTracker t("monotonicity_eps_sampled_surrogate", 1e-9);
    const TripleSampler from(space, p.r, p.delta, seed + 2);
    for (std::size_t i = 0; i < samples; ++i) {
      const Triple tr = from.draw(i);
      t.observe(deficiency_raw(space, tr) - bound, [&] { return to_json(tr); });
    }
    report.push_back(t.finish(params));
  }
  {
    const double bound = phi_lower_bound(space, p.s, shrunk).value;
    SlackTracker t("monotonicity_radius_sampled_surrogate", 1e-9);
    const TripleSampler from(space, p.r, p.eps, seed + 3);
    for (std::size_t i = 0; i < samples; ++i) {
      const Triple tr = from.draw(i);
      t.observe(deficiency_raw(space, tr) - bound, [&] { return to_json(tr); });
    }
    report.push_back(t.finish(params));
  }
  {
    const double bound = phi_lower_bound(space, p.s, shrunk).value;
    SlackTracker t("monotonicity_joint_sampled_surrogate", 1e-9);
    const double rs[] = {p.r, 0.5 * (p.r + p.s), p.s};
    const double es[] = {p.eps, 0.5 * (p.eps + 2.0), 2.0};
    const std::size_t per_cell = std::max<std::size_t>(1, samples / 9);
    std::uint64_t cell = 0;
    for (double r1 : rs) {
      for (double e1 : es) {
        const TripleSampler from(space, r1, e1, seed + 4 + cell++);
        for (std::size_t i = 0; i < per_cell; ++i) {
          const Triple tr = from.draw(i);
          t.observe(deficiency_raw(space, tr) - bound, [&] {
            return json{{"r1", r1}, {"eps1", e1}, {"triple", to_json(tr)}};
          });
        }
      }
    }
    report.push_back(t.finish(params));
  }
  return report;
}

Report positivity_check(const Space& space, std::span<const double> r_grid,
                        std::span<const double> eps_grid, std::size_t samples,
                        std::uint64_t seed) {
  if (r_grid.empty() || eps_grid.empty()) throw ConfigError("positivity_check: empty grid");
  for (double r : r_grid) {
    for (double e : eps_grid) require_params(r, e);
  }
  Report report;
  double min_bound = std::numeric_limits<double>::infinity();
  std::uint64_t cell = 0;
  for (double r : r_grid) {
    for (double e : eps_grid) {
      const PhiBound bound = phi_lower_bound(space, r, e);
      const PhiEstimate est = phi_estimate(space, r, e, samples, seed + cell++);
      const double floor = phi_lower_bound_for(space, r, e, est.witness);
      min_bound = std::min(min_bound, bound.value);
      CheckRecord rec{.check = "positivity",
                      .params = {{"r", r}, {"eps", e}, {"lower", bound.value}, {"upper", est.value}},
                      .pass = bound.value > 0.0 && est.value >= floor - 1e-9,
                      .margin = est.value - floor,
                      .samples = samples};
      if (!rec.pass) rec.witness = to_json(est.witness);
      report.push_back(std::move(rec));
    }
  }
  report.push_back(CheckRecord{.check = "positivity_min_lower_bound",
                               .params = {{"cells", r_grid.size() * eps_grid.size()}},
                               .pass = min_bound > 0.0,
                               .margin = min_bound,
                               .samples = r_grid.size() * eps_grid.size()});
  return report;
}

}  // namespace geobary

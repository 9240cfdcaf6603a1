#include "geobary/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <string>

#include "geobary/barycenter.hpp"
#include "geobary/convexity.hpp"
#include "geobary/json_io.hpp"

namespace geobary {

using nlohmann::json;

namespace {

constexpr double kExact = 1e-12;
constexpr double kGeom = 1e-9;

// Mixture of spread-out, ball-local and nearly coincident points.
Point random_near(const GeodesicSpace& sp, Rng& rng, const Point& around) {
  const double u = rng.uniform();
  if (u < 0.45) return sp.sample_point(rng);
  if (u < 0.8) return sp.sample_at_distance(rng, around, rng.uniform(0.0, 2.0));
  return sp.sample_at_distance(rng, around, std::pow(10.0, -1.0 - 6.0 * rng.uniform()));
}

Triple random_triple(const GeodesicSpace& sp, Rng& rng) {
  Point a = sp.sample_point(rng);
  Point x = random_near(sp, rng, a);
  Point y = rng.bernoulli(0.5) ? random_near(sp, rng, x) : random_near(sp, rng, a);
  return {std::move(a), std::move(x), std::move(y)};
}

// Runs one check; an exception marks it failed with the message as witness.
void guarded(Report& report, const std::string& name, const std::function<void(Report&)>& body) {
  try {
    body(report);
  } catch (const std::exception& e) {
    report.push_back(CheckRecord{.check = name,
                                 .pass = false,
                                 .margin = -std::numeric_limits<double>::infinity(),
                                 .witness = json{{"error", e.what()}}});
  }
}

json opts_json(const Space& space, const VerifyOptions& o) {
  return {{"space", space.name()}, {"samples", o.samples}, {"seed", o.seed}};
}

}  // namespace

Report verify_geodesic_core(const Space& space, const VerifyOptions& o) {
  const GeodesicSpace& sp = space.impl();
  const json params = opts_json(space, o);
  Report report;
  guarded(report, "metric_axioms", [&](Report& out) {
    SlackTracker symmetry("metric_symmetry", 0.0);
    SlackTracker triangle("triangle_inequality", kExact);
    SlackTracker identity("identity_of_indiscernibles", 0.0);
    Rng rng = Rng::stream(o.seed, 101);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Triple t = random_triple(sp, rng);
      const double dxy = sp.distance(t.x, t.y);
      symmetry.observe(-std::fabs(dxy - sp.distance(t.y, t.x)), [&] { return to_json(t); });
      triangle.observe(sp.distance(t.x, t.a) + sp.distance(t.a, t.y) - dxy,
                       [&] { return to_json(t); });
      const bool same = t.x == t.y;
      const bool ok = sp.distance(t.x, t.x) == 0.0 && (same ? dxy == 0.0 : dxy > 0.0);
      identity.observe(ok ? 0.0 : -1.0, [&] { return to_json(t); });
    }
    out.push_back(symmetry.finish(params));
    out.push_back(triangle.finish(params));
    out.push_back(identity.finish(params));
  });
  guarded(report, "midpoint", [&](Report& out) {
    SlackTracker post("midpoint_postcondition", kGeom);
    SlackTracker sym("midpoint_symmetry", kGeom);
    SlackTracker agree("geodesic_midpoint_agreement", kGeom);
    SlackTracker convex("convex_metric", kExact);
    Rng rng = Rng::stream(o.seed, 102);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Triple t = random_triple(sp, rng);
      const Point m = sp.midpoint(t.x, t.y);
      const double half = sp.distance(t.x, t.y) / 2.0;
      post.observe(-std::max(std::fabs(sp.distance(m, t.x) - half), std::fabs(sp.distance(m, t.y) - half)),
                   [&] { return to_json(t); });
      post.observe(-sp.distance(sp.midpoint(t.x, t.x), t.x), [&] { return to_json(t); });
      sym.observe(-sp.distance(m, sp.midpoint(t.y, t.x)), [&] { return to_json(t); });
      agree.observe(-sp.distance(m, sp.geodesic_point(t.x, t.y, 0.5)), [&] { return to_json(t); });
      convex.observe((sp.distance(t.x, t.a) + sp.distance(t.y, t.a)) / 2.0 - sp.distance(m, t.a),
                     [&] { return to_json(t); });
    }
    out.push_back(post.finish(params));
    out.push_back(sym.finish(params));
    out.push_back(agree.finish(params));
    out.push_back(convex.finish(params));
  });
  guarded(report, "uniform_convexity", [&](Report& out) {
    const Modulus eta = sp.modulus();
    SlackTracker uc("uniform_convexity", kGeom);
    Rng rng = Rng::stream(o.seed, 103);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Triple t = random_triple(sp, rng);
      const double r = std::max(sp.distance(t.x, t.a), sp.distance(t.y, t.a));
      if (r == 0.0) continue;
      const double eps = std::min(2.0, sp.distance(t.x, t.y) / r);
      if (!(eps > 0.0)) continue;
      uc.observe((1.0 - eta(r, eps)) * r - sp.distance(sp.midpoint(t.x, t.y), t.a),
                 [&] { return json{{"r", r}, {"eps", eps}, {"triple", to_json(t)}}; });
    }
    json p = params;
    p["modulus"] = eta.form();
    out.push_back(uc.finish(p));
  });
  guarded(report, "modulus_range", [&](Report& out) {
    const Modulus eta = sp.modulus();
    SlackTracker range("modulus_range", 0.0);
    SlackTracker mono("modulus_monotone", 0.0);
    const double rs[] = {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
    for (int j = 1; j <= 20; ++j) {
      const double eps = 0.1 * j;
      double prev = std::numeric_limits<double>::infinity();
      for (double r : rs) {
        const double v = eta(r, eps);
        range.observe(v > 0.0 && v <= 1.0 ? 0.0 : -1.0,
                      [&] { return json{{"r", r}, {"eps", eps}, {"eta", v}}; });
        if (eta.monotone_in_r()) {
          mono.observe(prev - v, [&] { return json{{"r", r}, {"eps", eps}}; });
        }
        prev = v;
      }
    }
    json p = params;
    p["modulus"] = eta.form();
    out.push_back(range.finish(p));
    if (eta.monotone_in_r()) out.push_back(mono.finish(p));
  });
  guarded(report, "geodesic_composition", [&](Report& out) {
    SlackTracker comp("geodesic_composition", kGeom);
    SlackTracker ends("geodesic_endpoints", kGeom);
    Rng rng = Rng::stream(o.seed, 104);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Triple t = random_triple(sp, rng);
      const double d = sp.distance(t.x, t.y);
      const double s = rng.uniform();
      const double u = rng.uniform();
      const Point gs = sp.geodesic_point(t.x, t.y, s);
      const Point gu = sp.geodesic_point(t.x, t.y, u);
      comp.observe(-std::fabs(sp.distance(gs, gu) - std::fabs(s - u) * d), [&] {
        return json{{"s", s}, {"t", u}, {"triple", to_json(t)}};
      });
      ends.observe(-std::max(std::fabs(sp.distance(gs, t.x) - s * d),
                             std::fabs(sp.distance(gs, t.y) - (1.0 - s) * d)),
                   [&] { return json{{"t", s}, {"triple", to_json(t)}}; });
    }
    out.push_back(comp.finish(params));
    out.push_back(ends.finish(params));
  });
  return report;
}

Report verify_space_inequalities(const Space& space, const VerifyOptions& o) {
  const GeodesicSpace& sp = space.impl();
  const json params = opts_json(space, o);
  Report report;
  guarded(report, "busemann_convexity", [&](Report& out) {
    SlackTracker b("busemann_convexity", kGeom);
    Rng rng = Rng::stream(o.seed, 201);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Triple t1 = random_triple(sp, rng);
      const Point x2 = random_near(sp, rng, t1.x);
      const Point y2 = random_near(sp, rng, t1.y);
      const double lhs = sp.distance(sp.midpoint(t1.x, t1.y), sp.midpoint(x2, y2));
      b.observe(0.5 * (sp.distance(t1.x, x2) + sp.distance(t1.y, y2)) - lhs, [&] {
        return json{{"x1", to_json(t1.x)}, {"y1", to_json(t1.y)}, {"x2", to_json(x2)}, {"y2", to_json(y2)}};
      });
    }
    out.push_back(b.finish(params));
  });
  if (!sp.is_cat0()) return report;
  guarded(report, "cn_inequality", [&](Report& out) {
    SlackTracker cn("cn_inequality", kGeom);
    SlackTracker ub("uniform_busemann", kGeom);
    SlackTracker eq("cn_equality_euclidean", kGeom);
    const bool flat = space.kind() == SpaceKind::euclidean;
    Rng rng = Rng::stream(o.seed, 202);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Triple t = random_triple(sp, rng);
      const long double dxy2 = sp.squared_distance(t.x, t.y);
      const Point m = sp.midpoint(t.x, t.y);
      const long double rhs = 0.5L * sp.squared_distance(t.x, t.a) + 0.5L * sp.squared_distance(t.y, t.a);
      const long double lhs = sp.squared_distance(m, t.a);
      const double slack = static_cast<double>(rhs - dxy2 / 4.0L - lhs);
      cn.observe(slack, [&] { return to_json(t); });
      // alpha(t) = t^2 / 4
      const double alpha = static_cast<double>(dxy2 / 4.0L);
      ub.observe(static_cast<double>(rhs - alpha - lhs), [&] { return to_json(t); });
      if (flat) eq.observe(-std::fabs(slack), [&] { return to_json(t); });
    }
    out.push_back(cn.finish(params));
    out.push_back(ub.finish(params));
    if (flat) out.push_back(eq.finish(params));
  });
  return report;
}

Report verify_measure(const Space& space, const Measure& measure, const VerifyOptions& o) {
  const GeodesicSpace& sp = space.impl();
  const json params = opts_json(space, o);
  Report report;
  guarded(report, "theta_moment", [&](Report& out) {
    SlackTracker finite("theta_moment_finite", 0.0);
    SlackTracker lip("theta_moment_lipschitz", kExact);
    Rng rng = Rng::stream(o.seed, 301);
    const std::size_t n = std::min<std::size_t>(o.samples, 2000);
    for (std::size_t i = 0; i < n; ++i) {
      const Point x = sp.sample_point(rng);
      const Point x2 = random_near(sp, rng, x);
      for (double theta : {1.0, 2.0, 3.0}) {
        const bool ok = std::isfinite(theta_moment(space, measure, x, theta)) &&
                        std::isfinite(theta_moment(space, measure, x2, theta));
        finite.observe(ok ? 0.0 : -1.0, [&] { return json{{"x", to_json(x)}, {"theta", theta}}; });
      }
      const double diff = std::fabs(theta_moment(space, measure, x, 1.0) -
                                    theta_moment(space, measure, x2, 1.0));
      lip.observe(sp.distance(x, x2) - diff, [&] { return json{{"x", to_json(x)}, {"x2", to_json(x2)}}; });
    }
    out.push_back(finite.finish(params));
    out.push_back(lip.finish(params));
  });
  return report;
}

Report verify_convexity(const Space& space, const VerifyOptions& o) {
  const GeodesicSpace& sp = space.impl();
  const json params = opts_json(space, o);
  Report report;
  guarded(report, "deficiency", [&](Report& out) {
    SlackTracker nonneg("deficiency_nonnegative", kGeom);
    SlackTracker sym("deficiency_symmetric", kExact);
    Rng rng = Rng::stream(o.seed, 401);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Triple t = random_triple(sp, rng);
      const double s = deficiency_raw(space, t);
      nonneg.observe(s, [&] { return to_json(t); });
      sym.observe(-std::fabs(s - deficiency_raw(space, Triple{t.a, t.y, t.x})), [&] { return to_json(t); });
    }
    out.push_back(nonneg.finish(params));
    out.push_back(sym.finish(params));
  });

  const double r_grid[] = {0.5, 1.0, 2.0};
  const double eps_grid[] = {0.1, 1.0, 2.0};
  guarded(report, "phi_inequality", [&](Report& out) {
    SlackTracker ineq("phi_inequality", kGeom);
    const std::size_t per_cell = std::max<std::size_t>(1, o.samples / 9);
    std::uint64_t cell = 0;
    for (double r : r_grid) {
      for (double e : eps_grid) {
        const TripleSampler sampler(space, r, e, o.seed + 410 + cell++);
        for (std::size_t i = 0; i < per_cell; ++i) {
          const Triple t = sampler.draw(i);
          ineq.observe(deficiency_raw(space, t) - phi_lower_bound_for(space, r, e, t),
                       [&] { return json{{"r", r}, {"eps", e}, {"triple", to_json(t)}}; });
        }
      }
    }
    out.push_back(ineq.finish(params));
  });
  guarded(report, "phi_estimate", [&](Report& out) {
    const std::size_t n = std::max<std::size_t>(10, std::min<std::size_t>(o.samples, 2000));
    SlackTracker prefix("phi_prefix_monotone", 0.0);
    SlackTracker exact("phi_euclidean_exact", 1e-4);
    const bool flat = space.kind() == SpaceKind::euclidean;
    std::uint64_t cell = 0;
    for (double r : r_grid) {
      for (double e : eps_grid) {
        const std::uint64_t seed = o.seed + 420 + cell++;
        const PhiEstimate coarse = phi_estimate(space, r, e, n / 10, seed);
        const PhiEstimate fine = phi_estimate(space, r, e, n, seed);
        prefix.observe(coarse.value - fine.value, [&] { return json{{"r", r}, {"eps", e}}; });
        if (flat) {
          exact.observe(-std::fabs(fine.value - phi_euclidean(r, e)),
                        [&] { return json{{"r", r}, {"eps", e}, {"value", fine.value}}; });
        }
      }
    }
    out.push_back(prefix.finish(params));
    if (flat) out.push_back(exact.finish(params));
  });
  guarded(report, "phi_monotonicity", [&](Report& out) {
    const std::size_t n = std::min<std::size_t>(o.samples, 10000);
    for (auto& rec : phi_monotonicity_report(space, {.r = 1.0, .s = 2.0, .eps = 0.5, .delta = 1.5},
                                               n, o.seed + 430)) {
      out.push_back(std::move(rec));
    }
  });
  guarded(report, "positivity", [&](Report& out) {
    const std::size_t n = std::max<std::size_t>(10, std::min<std::size_t>(o.samples, 1000));
    for (auto& rec : positivity_check(space, r_grid, eps_grid, n, o.seed + 440)) out.push_back(std::move(rec));
  });
  return report;
}

Report verify_barycenter(const Space& space, const Measure& measure, const VerifyOptions& o) {
  const GeodesicSpace& sp = space.impl();
  const json params = opts_json(space, o);
  const std::size_t n = std::max<std::size_t>(10, std::min<std::size_t>(o.samples, 1000));
  Report report;
  Rng anchors = Rng::stream(o.seed, 501);
  const Point a = measure.atom(0);
  const Point b = sp.sample_point(anchors);
  const Objective fa(space, measure, a);
  const Objective fb(space, measure, b);

  guarded(report, "anchor_independence", [&](Report& out) {
    SlackTracker diff("anchor_independence", kGeom);
    SlackTracker ident("g_identification", kGeom);
    Rng rng = Rng::stream(o.seed, 502);
    const double d0 = fa(a) - fb(a);
    const double g0 = fa(a) - g(space, measure, a);
    for (std::size_t i = 0; i < n; ++i) {
      const Point x = random_near(sp, rng, measure.atom(rng.index(measure.size())));
      diff.observe(-std::fabs(fa(x) - fb(x) - d0), [&] { return to_json(x); });
      ident.observe(-std::fabs(fa(x) - g(space, measure, x) - g0), [&] { return to_json(x); });
    }
    out.push_back(diff.finish(params));
    out.push_back(ident.finish(params));
  });
  guarded(report, "quasiconvexity", [&](Report& out) {
    SlackTracker identity("midpoint_identity", kGeom);
    SlackTracker chain("quasiconvexity_chain", kGeom);
    SlackTracker strict("strict_quasiconvexity", 0.0);
    Rng rng = Rng::stream(o.seed, 503);
    for (std::size_t i = 0; i < n; ++i) {
      const Point x0 = sp.sample_point(rng);
      const Point z0 = random_near(sp, rng, x0);
      if (sp.distance(x0, z0) == 0.0) continue;
      const auto c = quasiconvexity_certificate(fa, x0, z0);
      auto w = [&] { return json{{"x0", to_json(x0)}, {"z0", to_json(z0)}}; };
      identity.observe(-std::fabs(c.identity_residual), w);
      chain.observe(c.f_max - c.bound - c.f_mid, w);
      strict.observe(c.bound > 0.0 && c.f_mid < c.f_max ? 0.0 : -1.0, w);
    }
    out.push_back(identity.finish(params));
    out.push_back(chain.finish(params));
    out.push_back(strict.finish(params));
  });
  guarded(report, "coercivity", [&](Report& out) {
    const double radii[] = {1.0, 10.0, 100.0, 1000.0, 10000.0};
    const auto rep = coercivity_probe(fa, a, radii);
    out.push_back(CheckRecord{.check = "coercivity",
                              .params = json{{"space", space.name()}, {"radii", rep.radii}, {"values", rep.values}},
                              .pass = rep.pass,
                              .margin = rep.values.back() - rep.values.front(),
                              .samples = rep.values.size()});
  });
  guarded(report, "solve", [&](Report& out) {
    SolveOptions opts;
    opts.seed = o.seed;
    const BarycenterResult res = solve(space, measure, a, opts);
    out.push_back(CheckRecord{.check = "solve_uniqueness",
                              .params = json{{"space", space.name()}, {"tol", res.tol}},
                              .pass = res.certificate.gap <= 2.0 * res.tol,
                              .margin = 2.0 * res.tol - res.certificate.gap,
                              .samples = 2});
    const BarycenterResult other = solve(space, measure, b, opts);
    const double gap = sp.distance(res.point, other.point);
    out.push_back(CheckRecord{.check = "solve_anchor_independence",
                              .params = json{{"space", space.name()}, {"tol", res.tol}},
                              .pass = gap <= 2.0 * res.tol,
                              .margin = 2.0 * res.tol - gap,
                              .samples = 2});
    SlackTracker probes("solve_beats_probes", 1e-7);
    Rng rng = Rng::stream(o.seed, 504);
    const double g_best = res.g_value;
    for (std::size_t i = 0; i < n; ++i) {
      const Point q = rng.bernoulli(0.5) ? sp.sample_point(rng)
                                         : sp.sample_at_distance(rng, res.point, std::pow(10.0, -6.0 * rng.uniform()));
      probes.observe(g(space, measure, q) - g_best, [&] { return to_json(q); });
    }
    out.push_back(probes.finish(params));
  });
  return report;
}

Measure default_measure(const Space& space, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, 601);
  std::vector<Point> atoms;
  std::vector<double> weights;
  double total = 0.0;
  for (int i = 0; i < 5; ++i) {
    atoms.push_back(space->sample_point(rng));
    weights.push_back(rng.uniform(0.1, 1.0));
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  return make_measure(space, std::move(atoms), std::move(weights));
}

Report run_verification(const Space& space, const std::optional<Measure>& measure,
                        const VerifyOptions& options) {
  const Measure P = measure ? *measure : default_measure(space, options.seed);
  Report all;
  auto append = [&](Report r) {
    for (auto& rec : r) all.push_back(std::move(rec));
  };
  append(verify_geodesic_core(space, options));
  append(verify_space_inequalities(space, options));
  append(verify_measure(space, P, options));
  append(verify_convexity(space, options));
  append(verify_barycenter(space, P, options));
  return all;
}

}  // namespace geobary

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geobary/error.hpp"
#include "geobary/measure.hpp"
#include "geobary/point.hpp"
#include "geobary/space.hpp"

namespace geobary {

/// f_a(x) = sum_i w_i (d^2(x, y_i) - d^2(y_i, a)) for a measure P and an
/// anchor a. Changing the anchor shifts f_a by a constant.
class Objective {
 public:
  Objective(Space space, Measure measure, Point anchor);

  const Space& space() const noexcept { return space_; }
  const Measure& measure() const noexcept { return measure_; }
  const Point& anchor() const noexcept { return anchor_; }

  double operator()(const Point& x) const;

  /// sum_i w_i d^2(y_i, a), so that f_a = g - anchor_offset().
  double anchor_offset() const noexcept { return static_cast<double>(offset_); }

 private:
  Space space_;
  Measure measure_;
  Point anchor_;
  long double offset_;
};

double f(const Objective& objective, const Point& x);

/// g(x) = sum_i w_i d^2(x, y_i).
double g(const Space& space, const Measure& measure, const Point& x);

/// g accumulated and returned in extended precision (no validation).
long double g_extended(const Space& space, const Measure& measure, const Point& x);

/// Terms of the strict quasi-convexity argument for one pair x0 != z0.
struct QuasiConvexityCertificate {
  double f_mid;               // f(m(x0, z0))
  double f_x0;
  double f_z0;
  double f_max;               // max(f(x0), f(z0))
  double deficiency_integral; // sum_i w_i S(y_i, x0, z0)
  double identity_residual;   // f_mid - ((f_x0 + f_z0)/2 - deficiency_integral)
  double radius;              // R: ball B(a, R) around the anchor
  double ball_mass;           // P(B(a, R))
  double s;                   // max(d(x0,a), d(z0,a)) + R
  double eps_arg;             // d^2(x0, z0) / (2 s^2)
  double phi_lower;           // certified lower bound of Phi(s, eps_arg)
  double bound;               // ball_mass * phi_lower
  double gap;                 // f_max - f_mid
  bool identity_holds;        // |identity_residual| <= 1e-9
  bool chain_holds;           // f_mid <= f_max - bound (+1e-9)
};

/// Throws DomainError when x0 == z0.
QuasiConvexityCertificate quasiconvexity_certificate(const Objective& objective, const Point& x0,
                                                     const Point& z0);

struct CoercivityReport {
  std::vector<double> radii;
  std::vector<double> values;
  std::size_t increasing_from = 0;  // values[increasing_from..] strictly increase
  bool eventually_increasing = false;
  bool exceeds_prior_max = false;   // last value beats every earlier value
  bool pass = false;
};

/// f evaluated at distance radii[k] from `base` along the space's
/// canonical geodesic ray. Throws PreconditionError unless radii are
/// strictly increasing and nonnegative.
CoercivityReport coercivity_probe(const Objective& objective, const Point& base,
                                  std::span<const double> radii);

/// Stochastic inductive mean: s_1 = Y_1, s_{k+1} = [s_k, Y_{k+1}]_{1/(k+1)}
/// with Y_k i.i.d. from the measure.
Point inductive_mean(const Space& space, const Measure& measure, std::size_t iterations,
                     std::uint64_t seed);

/// 1e-8 for Euclidean and lp spaces, 1e-6 for hyperbolic and trees.
double default_tolerance(const Space& space);

struct SolveOptions {
  std::optional<double> tol;  // default_tolerance(space) when empty
  std::uint64_t seed = 42;
  std::size_t max_cycles = 10000;
  std::size_t warm_start_iterations = 1000;
};

struct UniquenessCertificate {
  Point other_endpoint;
  double gap;  // distance between the two independent runs
};

struct BarycenterResult {
  Point point;
  double objective_value;  // f_a at point
  double g_value;
  std::size_t iterations;  // descent cycles of the returned run
  double tol;
  UniquenessCertificate certificate;
};

/// Raised when a run exhausts its cycle budget or the two independent runs
/// disagree by more than 2 tol.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Point first, Point second)
      : Error(what), first_(std::move(first)), second_(std::move(second)) {}

  const Point& first() const noexcept { return first_; }
  const Point& second() const noexcept { return second_; }

 private:
  Point first_;
  Point second_;
};

/// Barycenter of `measure`: inductive-mean warm start followed by cyclic
/// golden-section searches along geodesics, run twice from independent
/// seeds. Throws DomainError for tol <= 0 and ConvergenceError on failure.
BarycenterResult solve(const Space& space, const Measure& measure, const Point& anchor,
                       const SolveOptions& options = {});

}  // namespace geobary

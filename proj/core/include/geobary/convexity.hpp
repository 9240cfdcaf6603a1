#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include <nlohmann/json.hpp>

#include "geobary/point.hpp"
#include "geobary/report.hpp"
#include "geobary/space.hpp"

namespace geobary {

/// Argument (a, x, y) of the midpoint deficiency; a is the reference point.
struct Triple {
  Point a;
  Point x;
  Point y;
};

nlohmann::json to_json(const Triple& t);

/// S(a,x,y) = d^2(x,a)/2 + d^2(y,a)/2 - d^2(m(x,y),a), unclamped.
double deficiency_raw(const Space& space, const Triple& t);

/// S(a,x,y) with roundoff-level negatives clamped to zero. A clearly
/// negative value means the metric is not convex at t and raises
/// DomainError.
double deficiency(const Space& space, const Triple& t);

/// Membership in A_{r,eps}: d(x,a) <= r, d(y,a) <= r, d(x,y) >= eps r.
/// Each comparison is relaxed by `slack * max(1, r)` to absorb rounding.
/// Throws DomainError unless r > 0 and 0 < eps <= 2.
bool in_constraint_set(const Space& space, double r, double eps, const Triple& t,
                       double slack = 1e-12);

enum class PhiBoundKind {
  analytic,       // Euclidean: Phi(r,eps) = eps^2 r^2 / 4 exactly
  cn_comparison,  // CAT(0): S >= d^2(x,y)/4 >= eps^2 r^2 / 4
  modulus,        // from the modulus: r^2 eta (2 - eta)
};

struct PhiBound {
  double value;
  PhiBoundKind kind;
};

/// Certified lower bound on Phi(r, eps) for the space's kind.
PhiBound phi_lower_bound(const Space& space, double r, double eps);

/// The smaller of phi_lower_bound(r, eps) and the bound at the triple's own
/// radius and separation, which it satisfies exactly. Sampled members of
/// A_{r,eps} are only members up to rounding; near eps = 2 the modulus bound
/// is steep enough that the nominal bound alone misjudges them.
double phi_lower_bound_for(const Space& space, double r, double eps, const Triple& t);

/// eps^2 r^2 / 4: the value of Phi in every inner-product space.
double phi_euclidean(double r, double eps);

/// Sampled upper estimate of Phi(r, eps): the smallest deficiency seen.
struct PhiEstimate {
  double r = 0.0;
  double eps = 0.0;
  double value = 0.0;
  Triple witness;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Draws triples from A_{r,eps} around one anchor fixed by the seed.
///
/// Triple i is produced from its own random stream, so draw(i) does not
/// depend on which other triples were drawn. Each draw rejects proposals
/// until one lands in A_{r,eps}; after 1000 failed attempts it throws
/// SamplingError.
class TripleSampler {
 public:
  static constexpr std::size_t kAttemptsPerTriple = 1000;

  TripleSampler(Space space, double r, double eps, std::uint64_t seed);

  /// Sampler with an explicitly given anchor.
  TripleSampler(Space space, double r, double eps, std::uint64_t seed, Point anchor);

  const Point& anchor() const noexcept { return anchor_; }

  Triple draw(std::uint64_t index) const;

  /// Extremal configurations around the anchor that lie in A_{r,eps}.
  std::vector<Triple> extremal() const;

 private:
  Space space_;
  double r_;
  double eps_;
  std::uint64_t seed_;
  Point anchor_;
};

/// Minimum deficiency over the extremal configurations and `samples`
/// sampled triples. Deterministic for a fixed seed; the value is
/// nonincreasing in `samples`.
PhiEstimate phi_estimate(const Space& space, double r, double eps, std::size_t samples,
                         std::uint64_t seed);

/// d^2(m,a) <= d^2(x,a)/2 + d^2(y,a)/2 - Phi(r,eps) with Phi replaced by the
/// certified lower bound, up to 1e-9. Throws PreconditionError if t is not
/// in A_{r,eps}.
bool check_phi_inequality(const Space& space, double r, double eps, const Triple& t);

struct MonotonicityParams {
  double r;
  double s;
  double eps;
  double delta;
};

/// Set inclusions and monotonicity of Phi in r and eps:
///   A_{r,delta} subset A_{r,eps}            =>  Phi(r,eps) <= Phi(r,delta)
///   A_{r,eps}   subset A_{s,eps r/s}        =>  Phi(r,eps) >= Phi(s,eps r/s)
///   Phi(r1,eps1) >= Phi(s, eps r/s) on [r,s] x [eps,2].
/// Throws PreconditionError unless 0 < r <= s and 0 < eps <= delta <= 2.
Report phi_monotonicity_report(const Space& space, const MonotonicityParams& params,
                                 std::size_t samples, std::uint64_t seed);

/// Positivity of Phi on a grid: the certified lower bound is > 0 and the
/// sampled estimate does not undercut it.
Report positivity_check(const Space& space, std::span<const double> r_grid,
                        std::span<const double> eps_grid, std::size_t samples,
                        std::uint64_t seed);

}  // namespace geobary

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "geobary/measure.hpp"
#include "geobary/report.hpp"
#include "geobary/space.hpp"

namespace geobary {

struct VerifyOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
};

/// Metric axioms, midpoint and geodesic postconditions, convexity of the
/// metric and the uniform convexity inequality with the space's modulus.
Report verify_geodesic_core(const Space& space, const VerifyOptions& options);

/// Busemann convexity for every kind; CN and uniform Busemann inequalities
/// for the CAT(0) kinds.
Report verify_space_inequalities(const Space& space, const VerifyOptions& options);

/// theta-moment finiteness and the 1-Lipschitz property of the first moment.
Report verify_measure(const Space& space, const Measure& measure, const VerifyOptions& options);

/// Deficiency sign and symmetry, the Phi inequality, Phi estimates, the
/// monotonicity of Phi and its positivity.
Report verify_convexity(const Space& space, const VerifyOptions& options);

/// Anchor independence, the g identification, the midpoint identity and
/// quasi-convexity certificate, coercivity, and solver checks.
Report verify_barycenter(const Space& space, const Measure& measure, const VerifyOptions& options);

/// Five random atoms with random weights, deterministic in `seed`.
Measure default_measure(const Space& space, std::uint64_t seed);

/// Every suite above; `measure` defaults to default_measure(space, seed).
Report run_verification(const Space& space, const std::optional<Measure>& measure,
                        const VerifyOptions& options);

}  // namespace geobary

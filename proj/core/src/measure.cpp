#include "geobary/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geobary/error.hpp"

namespace geobary {

Measure make_measure(const Space& space, std::vector<Point> atoms, std::vector<double> weights) {
  if (atoms.empty()) throw DomainError("measure: empty atom list");
  if (atoms.size() != weights.size()) {
    throw DomainError("measure: " + std::to_string(atoms.size()) + " atoms but " +
                      std::to_string(weights.size()) + " weights");
  }
  for (const auto& a : atoms) space.check(a);
  long double total = 0.0L;
  for (double w : weights) {
    if (!std::isfinite(w) || !(w > 0.0)) throw DomainError("measure: weights must be positive");
    total += w;
  }
  if (std::fabs(total - 1.0L) > 1e-9L) {
    throw DomainError("measure: weights sum to " + std::to_string(static_cast<double>(total)) +
                      ", expected 1");
  }
  for (double& w : weights) w = static_cast<double>(w / total);
  return Measure(std::move(atoms), std::move(weights));
}

Measure make_uniform_measure(const Space& space, std::vector<Point> atoms) {
  std::vector<double> w(atoms.size(), atoms.empty() ? 0.0 : 1.0 / static_cast<double>(atoms.size()));
  return make_measure(space, std::move(atoms), std::move(w));
}

Measure make_dirac(const Space& space, Point atom) {
  std::vector<Point> atoms;
  atoms.push_back(std::move(atom));
  return make_measure(space, std::move(atoms), {1.0});
}

double theta_moment(const Space& space, const Measure& measure, const Point& x, double theta) {
  if (!(theta >= 1.0) || !std::isfinite(theta)) throw DomainError("theta_moment: theta must be >= 1");
  space.check(x);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < measure.size(); ++i) {
    const long double d = std::sqrt(space->squared_distance(x, measure.atom(i)));
    sum += measure.weight(i) * std::pow(d, static_cast<long double>(theta));
  }
  return static_cast<double>(sum);
}

std::size_t sample_atom(const Measure& measure, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  const auto w = measure.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    if (u < acc) return i;
  }
  return w.size() - 1;
}

}  // namespace geobary

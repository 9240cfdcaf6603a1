#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geobary/point.hpp"
#include "geobary/space.hpp"

namespace geobary {

/// Finitely supported probability measure: atoms with positive weights
/// summing to one.
class Measure {
 public:
  std::span<const Point> atoms() const noexcept { return atoms_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  const Point& atom(std::size_t i) const { return atoms_.at(i); }
  double weight(std::size_t i) const { return weights_.at(i); }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  friend Measure make_measure(const Space&, std::vector<Point>, std::vector<double>);

  Measure(std::vector<Point> atoms, std::vector<double> weights)
      : atoms_(std::move(atoms)), weights_(std::move(weights)) {}

  std::vector<Point> atoms_;
  std::vector<double> weights_;
};

/// Validates and builds a measure. Weights whose sum is within 1e-9 of one
/// are rescaled to sum to one; anything else is rejected with DomainError,
/// as are empty atom lists, nonpositive weights, length mismatches and
/// atoms that do not belong to `space`.
Measure make_measure(const Space& space, std::vector<Point> atoms, std::vector<double> weights);

/// Uniform weights 1/n.
Measure make_uniform_measure(const Space& space, std::vector<Point> atoms);

/// Dirac measure at `atom`.
Measure make_dirac(const Space& space, Point atom);

/// sum_i w_i d(x, y_i)^theta. Throws DomainError for theta < 1.
double theta_moment(const Space& space, const Measure& measure, const Point& x, double theta);

/// Draws an atom index with probability proportional to its weight.
std::size_t sample_atom(const Measure& measure, Rng& rng);

}  // namespace geobary

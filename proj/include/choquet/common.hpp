#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

// Thrown when an adaptive computation exhausts its subdivision or term
// budget before reaching the requested tolerance. Carries the best
// estimate so callers can degrade to a partial result.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best, double error)
      : std::runtime_error(what), best_estimate(best), error_estimate(error) {}

  double best_estimate;
  double error_estimate;
};

// Value together with an accumulated error bound.
struct ValErr {
  double value = 0.0;
  double error = 0.0;
};

enum class Monotonicity { none, nondecreasing, nonincreasing };

}  // namespace choquet

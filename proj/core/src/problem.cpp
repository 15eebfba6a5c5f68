#include "abcopt/problem.hpp"

#include <algorithm>
#include <cmath>

namespace abcopt {

Bounds Bounds::uniform(std::size_t dimension, double lower, double upper) {
  Bounds b{Vector(dimension, lower), Vector(dimension, upper)};
  b.validate();
  return b;
}

void Bounds::validate() const {
  if (lower.empty() || lower.size() != upper.size()) {
    throw ContractViolation("bounds: lower/upper must be non-empty and of equal length");
  }
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] < upper[j])) {
      throw ContractViolation("bounds: empty interval in dimension " + std::to_string(j));
    }
  }
}

Vector clamp_to_bounds(std::span<const double> x, const Bounds& bounds) {
  if (x.size() != bounds.dimension()) {
    throw ContractViolation("clamp_to_bounds: position has " + std::to_string(x.size()) +
                            " coordinates, bounds have " + std::to_string(bounds.dimension()));
  }
  Vector out(x.begin(), x.end());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = std::max(bounds.lower[j], std::min(bounds.upper[j], out[j]));
  }
  return out;
}

namespace {

double snap_one(double x, double quantum) {
  if (quantum <= 0.0) return x;
  const double steps = std::floor(x / quantum + 0.5);
  // Decimal steps such as 0.001 are reconstructed by division so the snapped
  // value is the double nearest to the decimal (0.291, not 0.29100000000000004).
  const double inverse = 1.0 / quantum;
  const double rounded_inverse = std::round(inverse);
  if (quantum < 1.0 && std::abs(inverse - rounded_inverse) < 1e-9 * rounded_inverse) {
    return steps / rounded_inverse;
  }
  return steps * quantum;
}

}  // namespace

Vector snap_to_granularity(std::span<const double> x, std::span<const double> quantum) {
  if (quantum.empty()) return Vector(x.begin(), x.end());
  if (quantum.size() != x.size()) {
    throw ContractViolation("snap_to_granularity: dimension mismatch");
  }
  Vector out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = snap_one(x[j], quantum[j]);
  return out;
}

Vector Problem::project(std::span<const double> x) const {
  if (!has_granularity()) return clamp_to_bounds(x, bounds);
  return clamp_to_bounds(snap_to_granularity(x, granularity), bounds);
}

void Problem::validate() const {
  bounds.validate();
  if (dimension == 0 || bounds.dimension() != dimension) {
    throw ContractViolation("problem " + name + ": bounds dimension does not match D");
  }
  if (!(acceptable_error > 0.0)) {
    throw ContractViolation("problem " + name + ": acceptable error must be positive");
  }
  if (has_granularity() && granularity.size() != dimension) {
    throw ContractViolation("problem " + name + ": granularity dimension does not match D");
  }
  if (!objective) {
    throw ContractViolation("problem " + name + ": missing objective");
  }
}

EvaluationBudget::EvaluationBudget(std::uint64_t max_evaluations) : max_(max_evaluations) {}

bool EvaluationBudget::charge() noexcept {
  if (used_ >= max_) return false;
  ++used_;
  return true;
}

std::size_t RandomStream::index(std::size_t n) {
  if (n == 0) throw ContractViolation("RandomStream::index: empty range");
  const auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
  return std::min(i, n - 1);
}

std::size_t RandomStream::index_except(std::size_t n, std::size_t excluded) {
  if (n < 2) throw ContractViolation("RandomStream::index_except: need at least two candidates");
  // Draw from n-1 slots and skip over the excluded one.
  std::size_t i = index(n - 1);
  if (excluded < n && i >= excluded) ++i;
  return i;
}

Vector position_from_draws(const Problem& problem, std::span<const double> unit_draws) {
  const Bounds& b = problem.bounds;
  if (unit_draws.size() != b.dimension()) {
    throw ContractViolation("position_from_draws: dimension mismatch");
  }
  Vector x(b.dimension());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = b.lower[j] + unit_draws[j] * b.width(j);
  }
  return problem.project(x);
}

Vector sample_uniform_position(const Problem& problem, RandomStream& rng) {
  Vector draws(problem.bounds.dimension());
  for (double& u : draws) u = rng.uniform01();
  return position_from_draws(problem, draws);
}

std::optional<double> Evaluator::operator()(std::span<const double> x) const {
  if (!budget_->charge()) return std::nullopt;
  return problem_->evaluate(x);
}

}  // namespace abcopt

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace abcopt {

using Vector = std::vector<double>;

/// Raised when a caller breaks a documented precondition (dimension
/// mismatch, out-of-range parameter, empty input, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Per-dimension box constraints; lower[j] < upper[j] for every j.
struct Bounds {
  Vector lower;
  Vector upper;

  static Bounds uniform(std::size_t dimension, double lower, double upper);

  std::size_t dimension() const noexcept { return lower.size(); }
  double width(std::size_t j) const { return upper[j] - lower[j]; }

  /// Throws ContractViolation unless both vectors have the same non-zero
  /// length and every interval is non-empty.
  void validate() const;
};

/// Replaces each coordinate by max(lower[j], min(upper[j], x[j])).
Vector clamp_to_bounds(std::span<const double> x, const Bounds& bounds);

/// Rounds x[j] to the nearest multiple of quantum[j] (ties round up).
/// A zero quantum leaves the coordinate untouched.
Vector snap_to_granularity(std::span<const double> x, std::span<const double> quantum);

using Objective = std::function<double(std::span<const double>)>;

/// A minimization problem with a known optimum and a success threshold.
struct Problem {
  std::string name;   // stable registry id, e.g. "f1"
  std::string title;  // human readable, e.g. "Zakharov"
  std::size_t dimension = 0;
  Bounds bounds;
  double optimum_value = 0.0;
  double acceptable_error = 1e-5;
  /// Empty for continuous problems; otherwise one quantum per dimension
  /// (0 means continuous in that dimension).
  Vector granularity;
  Objective objective;

  double evaluate(std::span<const double> x) const { return objective(x); }

  bool has_granularity() const noexcept { return !granularity.empty(); }

  /// Snap to granularity (if any), then clamp to bounds. Every position the
  /// optimizers evaluate goes through here.
  Vector project(std::span<const double> x) const;

  void validate() const;
};

/// Counts objective evaluations against a hard cap.
class EvaluationBudget {
 public:
  explicit EvaluationBudget(std::uint64_t max_evaluations = 200000);

  /// Consumes one evaluation. Returns false, leaving the counter untouched,
  /// when the cap has already been reached.
  bool charge() noexcept;

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t max_evaluations() const noexcept { return max_; }
  std::uint64_t remaining() const noexcept { return max_ - used_; }
  bool exhausted() const noexcept { return used_ >= max_; }

 private:
  std::uint64_t max_;
  std::uint64_t used_ = 0;
};

/// Seedable pseudo-random source. Identical seeds give identical draws.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi].
  double uniform(double lo, double hi) noexcept { return lo + uniform01() * (hi - lo); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  /// Uniform integer in [0, n) different from `excluded`. n must be >= 2.
  std::size_t index_except(std::size_t n, std::size_t excluded);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// x_j = lower_j + u_j (upper_j - lower_j), then projected onto the
/// problem's granularity and bounds.
Vector position_from_draws(const Problem& problem, std::span<const double> unit_draws);

Vector sample_uniform_position(const Problem& problem, RandomStream& rng);

/// Evaluates positions against a problem while charging a budget.
class Evaluator {
 public:
  Evaluator(const Problem& problem, EvaluationBudget& budget) : problem_(&problem), budget_(&budget) {}

  /// nullopt when the budget is exhausted; nothing is evaluated then.
  std::optional<double> operator()(std::span<const double> x) const;

  const Problem& problem() const noexcept { return *problem_; }
  const EvaluationBudget& budget() const noexcept { return *budget_; }

 private:
  const Problem* problem_;
  EvaluationBudget* budget_;
};

}  // namespace abcopt

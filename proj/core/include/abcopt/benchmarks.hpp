#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abcopt/problem.hpp"

namespace abcopt {

// Test functions. All are minimized; see problem_by_name() for the ranges,
// dimensions and acceptable errors used by the experiments.

double zakharov(std::span<const double> x);
/// 1 - cos(2 pi r) + 0.1 r with r = |x|.
double salomon(std::span<const double> x);
/// sum |x_i|^(i+1), i counted from 1.
double sum_of_powers(std::span<const double> x);
double levy1(std::span<const double> x);
double levy2(std::span<const double> x);
double beale(std::span<const double> x);
double colville(std::span<const double> x);

struct KowalikData {
  std::array<double, 11> a;
  std::array<double, 11> b;

  /// The 11-point enzyme-reaction dataset used throughout the global
  /// optimization literature.
  static const KowalikData& standard();
};

/// Returned when a Kowalik denominator vanishes.
inline constexpr double kKowalikSentinel = 1e300;

double kowalik(std::span<const double> x, const KowalikData& data = KowalikData::standard());

struct ShiftVector {
  Vector offsets;
  double bias = 390.0;

  /// Offsets drawn uniformly in [-radius, radius]^D from a dedicated stream.
  static ShiftVector random_interior(std::size_t dimension, std::uint64_t seed,
                                     double radius = 80.0, double bias = 390.0);
};

/// sum_{i<D} 100 (z_i^2 - z_{i+1})^2 + (z_i - 1)^2 + bias, z = x - o + 1.
double shifted_rosenbrock(std::span<const double> x, const ShiftVector& shift);

class UnknownNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemOptions {
  std::uint64_t shift_seed = 2005;
  double shift_bias = 390.0;
  std::optional<Vector> shift_offsets;
  double spring_penalty_weight = 1e3;
};

/// Registry lookup: "f1".."f10" or an alias ("zakharov", "beale", "spring"...).
/// Throws UnknownNameError listing the valid names.
Problem problem_by_name(std::string_view name, const ProblemOptions& options = {});

/// Canonical ids in registry order, f1..f10.
std::vector<std::string> problem_names();

/// Alias for a canonical id ("f6" -> "beale").
std::string problem_alias(std::string_view canonical);

}  // namespace abcopt

#include "abcopt/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "abcopt/spring.hpp"

namespace abcopt {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double v) { return v * v; }

}  // namespace

double zakharov(std::span<const double> x) {
  double squares = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    squares += x[i] * x[i];
    weighted += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  const double w2 = weighted * weighted;
  return squares + w2 + w2 * w2;
}

double salomon(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  const double r = std::sqrt(s);
  return 1.0 - std::cos(2.0 * kPi * r) + 0.1 * r;
}

double sum_of_powers(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += std::pow(std::abs(x[i]), static_cast<double>(i + 2));
  }
  return s;
}

double levy1(std::span<const double> x) {
  const std::size_t d = x.size();
  auto y = [&](std::size_t i) { return 1.0 + 0.25 * (x[i] + 1.0); };
  double s = 10.0 * sq(std::sin(kPi * y(0)));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(kPi * y(i + 1))));
  }
  return kPi / static_cast<double>(d) * s + sq(y(d - 1) - 1.0);
}

double levy2(std::span<const double> x) {
  const std::size_t d = x.size();
  double s = sq(std::sin(3.0 * kPi * x[0]));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * kPi * x[i + 1])));
  }
  const double last = x[d - 1];
  return 0.1 * s + sq(last - 1.0) * (1.0 + sq(std::sin(2.0 * kPi * last)));
}

double beale(std::span<const double> x) {
  const double x1 = x[0];
  const double x2 = x[1];
  return sq(1.5 - x1 * (1.0 - x2)) + sq(2.25 - x1 * (1.0 - x2 * x2)) +
         sq(2.625 - x1 * (1.0 - x2 * x2 * x2));
}

double colville(std::span<const double> x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  return 100.0 * sq(x1 * x1 - x2) + sq(x1 - 1.0) + sq(x3 - 1.0) + 90.0 * sq(x3 * x3 - x4) +
         10.1 * (sq(x2 - 1.0) + sq(x4 - 1.0)) + 19.8 * (x2 - 1.0) * (x4 - 1.0);
}

const KowalikData& KowalikData::standard() {
  static const KowalikData data{
      {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246},
      {4.0, 2.0, 1.0, 0.5, 0.25, 1.0 / 6.0, 0.125, 0.1, 1.0 / 12.0, 1.0 / 14.0, 0.0625}};
  return data;
}

double kowalik(std::span<const double> x, const KowalikData& data) {
  double s = 0.0;
  for (std::size_t i = 0; i < data.a.size(); ++i) {
    const double b = data.b[i];
    const double den = b * b + b * x[2] + x[3];
    if (std::abs(den) < 1e-300) return kKowalikSentinel;
    s += sq(data.a[i] - x[0] * (b * b + b * x[1]) / den);
  }
  return s;
}

ShiftVector ShiftVector::random_interior(std::size_t dimension, std::uint64_t seed, double radius,
                                         double bias) {
  RandomStream rng(seed);
  ShiftVector shift;
  shift.offsets.resize(dimension);
  for (double& o : shift.offsets) o = rng.uniform(-radius, radius);
  shift.bias = bias;
  return shift;
}

double shifted_rosenbrock(std::span<const double> x, const ShiftVector& shift) {
  if (x.size() != shift.offsets.size()) {
    throw ContractViolation("shifted_rosenbrock: shift dimension does not match x");
  }
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double zi = x[i] - shift.offsets[i] + 1.0;
    const double zn = x[i + 1] - shift.offsets[i + 1] + 1.0;
    s += 100.0 * sq(zi * zi - zn) + sq(zi - 1.0);
  }
  return s + shift.bias;
}

namespace {

struct Entry {
  const char* id;
  const char* alias;
};

constexpr Entry kEntries[] = {
    {"f1", "zakharov"}, {"f2", "salomon"},   {"f3", "sum_powers"}, {"f4", "levy1"},
    {"f5", "levy2"},    {"f6", "beale"},     {"f7", "colville"},   {"f8", "kowalik"},
    {"f9", "shifted_rosenbrock"}, {"f10", "spring"},
};

constexpr Entry kExtraAliases[] = {
    {"f2", "skelton"}, {"f3", "sum_of_powers"}, {"f9", "rosenbrock"}, {"f10", "compression_spring"},
};

Problem make(std::string id, std::string title, std::size_t d, double lo, double hi, double optimum,
             double ae, Objective f) {
  Problem p;
  p.name = std::move(id);
  p.title = std::move(title);
  p.dimension = d;
  p.bounds = Bounds::uniform(d, lo, hi);
  p.optimum_value = optimum;
  p.acceptable_error = ae;
  p.objective = std::move(f);
  return p;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string canonical_id(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& e : kEntries) {
    if (key == e.id || key == e.alias) return e.id;
  }
  for (const auto& e : kExtraAliases) {
    if (key == e.alias) return e.id;
  }
  std::string valid;
  for (const auto& e : kEntries) {
    if (!valid.empty()) valid += ", ";
    valid += std::string(e.id) + " (" + e.alias + ")";
  }
  throw UnknownNameError("unknown problem '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace

Problem problem_by_name(std::string_view name, const ProblemOptions& options) {
  const std::string id = canonical_id(name);
  Problem p;
  if (id == "f1") {
    p = make(id, "Zakharov", 30, -5.12, 5.12, 0.0, 1e-2, zakharov);
  } else if (id == "f2") {
    p = make(id, "Salomon", 30, -100.0, 100.0, 0.0, 1e-1, salomon);
  } else if (id == "f3") {
    p = make(id, "Sum of different powers", 30, -1.0, 1.0, 0.0, 1e-5, sum_of_powers);
  } else if (id == "f4") {
    p = make(id, "Levy mountain 1", 30, -10.0, 10.0, 0.0, 1e-5, levy1);
  } else if (id == "f5") {
    p = make(id, "Levy mountain 2", 30, -5.0, 5.0, 0.0, 1e-5, levy2);
  } else if (id == "f6") {
    p = make(id, "Beale", 2, -4.5, 4.5, 0.0, 1e-5, beale);
  } else if (id == "f7") {
    p = make(id, "Colville", 4, -10.0, 10.0, 0.0, 1e-5, colville);
  } else if (id == "f8") {
    p = make(id, "Kowalik", 4, -5.0, 5.0, 3.07e-4, 1e-5,
             [](std::span<const double> x) { return kowalik(x); });
  } else if (id == "f9") {
    constexpr std::size_t d = 10;
    ShiftVector shift = ShiftVector::random_interior(d, options.shift_seed, 80.0, options.shift_bias);
    if (options.shift_offsets) {
      if (options.shift_offsets->size() != d) {
        throw ContractViolation("f9: shift offsets must have 10 entries");
      }
      shift.offsets = *options.shift_offsets;
    }
    const double bias = shift.bias;
    p = make(id, "Shifted Rosenbrock", d, -100.0, 100.0, bias, 1e-1,
             [shift = std::move(shift)](std::span<const double> x) {
               return shifted_rosenbrock(x, shift);
             });
  } else {
    p = spring_problem(options.spring_penalty_weight);
  }
  p.validate();
  return p;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> out;
  for (const auto& e : kEntries) out.emplace_back(e.id);
  return out;
}

std::string problem_alias(std::string_view canonical) {
  for (const auto& e : kEntries) {
    if (canonical == e.id) return e.alias;
  }
  return {};
}

}  // namespace abcopt

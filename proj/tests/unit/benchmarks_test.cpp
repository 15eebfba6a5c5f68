#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "abcopt/benchmarks.hpp"

namespace abcopt {
namespace {

constexpr double kPi = std::numbers::pi;

Vector filled(std::size_t d, double v) { return Vector(d, v); }

TEST(Zakharov, SpotValues) {
  EXPECT_EQ(zakharov(filled(30, 0.0)), 0.0);
  // sum x^2 = 2, s = 0.5 * 1 + 0.5 * 2 = 1.5: 2 + 2.25 + 5.0625
  EXPECT_NEAR(zakharov(Vector{1, 1}), 9.3125, 1e-12);
  EXPECT_NEAR(zakharov(Vector{-1, -1}), 9.3125, 1e-12);
}

TEST(Salomon, SpotValues) {
  EXPECT_EQ(salomon(filled(30, 0.0)), 0.0);
  Vector unit(30, 0.0);
  unit[0] = 1.0;
  EXPECT_NEAR(salomon(unit), 0.1, 1e-12);
  EXPECT_NEAR(salomon(Vector{0.3, 0.4}), 1.0 - std::cos(kPi) + 0.05, 1e-12);
}

TEST(SumOfPowers, SpotValues) {
  EXPECT_EQ(sum_of_powers(filled(30, 0.0)), 0.0);
  EXPECT_NEAR(sum_of_powers(Vector{0.5, 0.5}), 0.375, 1e-15);
  EXPECT_NEAR(sum_of_powers(Vector{-0.5, 0.5}), 0.375, 1e-15);
}

TEST(Levy1, SpotValues) {
  EXPECT_NEAR(levy1(filled(30, -1.0)), 0.0, 1e-12);
  for (std::size_t d : {2u, 5u, 30u}) {
    const double expected = kPi * static_cast<double>(d - 1) / static_cast<double>(d) + 1.0;
    EXPECT_NEAR(levy1(filled(d, 3.0)), expected, 1e-12) << "D=" << d;
  }
  EXPECT_NEAR(levy1(Vector{-1.0}), 0.0, 1e-12);
}

TEST(Levy2, SpotValues) {
  EXPECT_NEAR(levy2(filled(30, 1.0)), 0.0, 1e-12);
  for (std::size_t d : {2u, 7u, 30u}) {
    EXPECT_NEAR(levy2(filled(d, 0.0)), 0.1 * static_cast<double>(d - 1) + 1.0, 1e-12) << "D=" << d;
  }
  EXPECT_NEAR(levy2(Vector{1.0}), 0.0, 1e-12);
}

TEST(Beale, SpotValues) {
  EXPECT_EQ(beale(Vector{3.0, 0.5}), 0.0);
  EXPECT_NEAR(beale(Vector{0.0, 0.0}), 14.203125, 1e-12);
  const double near = beale(Vector{3.0, 0.5 + 1e-6});
  EXPECT_GT(near, 0.0);
  EXPECT_LT(near, 1e-9);
}

TEST(Colville, SpotValues) {
  EXPECT_EQ(colville(Vector{1, 1, 1, 1}), 0.0);
  EXPECT_NEAR(colville(Vector{0, 0, 0, 0}), 42.0, 1e-12);
  EXPECT_NEAR(colville(Vector{1, 1, 1, 0}), 100.1, 1e-12);
}

// Independent transcription of the 11-point Kowalik data, written with
// 1/b as usually tabulated.
double kowalik_oracle(const Vector& x) {
  const double a[] = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                      0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
  const double inv_b[] = {0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};
  double s = 0;
  for (int i = 0; i < 11; ++i) {
    const double b = 1.0 / inv_b[i];
    const double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
    s += r * r;
  }
  return s;
}

TEST(Kowalik, MatchesTabulatedMinimum) {
  const Vector opt{0.1928, 0.1908, 0.1231, 0.1357};
  EXPECT_NEAR(kowalik(opt), 3.07e-4, 1e-5);
  EXPECT_NEAR(kowalik(opt), kowalik_oracle(opt), 1e-15);
}

TEST(Kowalik, MatchesOracleOnRandomPoints) {
  RandomStream rng(11);
  for (int t = 0; t < 1000; ++t) {
    Vector x(4);
    for (double& v : x) v = rng.uniform(-5, 5);
    const double expected = kowalik_oracle(x);
    if (std::isfinite(expected) && std::abs(expected) < 1e12) {
      EXPECT_NEAR(kowalik(x), expected, 1e-9 * std::max(1.0, expected));
    }
  }
}

TEST(Kowalik, ZeroFirstCoordinateLeavesSumOfSquares) {
  const auto& d = KowalikData::standard();
  double expected = 0;
  for (double a : d.a) expected += a * a;
  EXPECT_NEAR(kowalik(Vector{0.0, 3.0, -2.0, 1.5}), expected, 1e-15);
}

TEST(Kowalik, PerturbationRaisesValue) {
  EXPECT_GT(kowalik(Vector{0.2028, 0.1908, 0.1231, 0.1357}), 3.07e-4);
}

TEST(Kowalik, VanishingDenominatorGivesSentinel) {
  // b_1 = 4: 16 + 4 x3 + x4 = 0 at x3 = 0, x4 = -16.
  EXPECT_EQ(kowalik(Vector{1.0, 0.0, 0.0, -16.0}), kKowalikSentinel);
}

TEST(ShiftedRosenbrock, SpotValues) {
  const ShiftVector s = ShiftVector::random_interior(10, 2005);
  EXPECT_NEAR(shifted_rosenbrock(s.offsets, s), s.bias, 1e-9);

  const ShiftVector zero{Vector{0.0, 0.0}, 0.0};
  EXPECT_NEAR(shifted_rosenbrock(Vector{1.0, 1.0}, zero), 401.0, 1e-12);
  const ShiftVector biased{Vector{0.0, 0.0}, 390.0};
  EXPECT_NEAR(shifted_rosenbrock(Vector{0.0, 0.0}, biased), 390.0, 1e-12);
  EXPECT_THROW(shifted_rosenbrock(Vector{0.0}, zero), ContractViolation);
}

TEST(ShiftVector, IsSeededAndInsideRadius) {
  const ShiftVector a = ShiftVector::random_interior(10, 2005);
  const ShiftVector b = ShiftVector::random_interior(10, 2005);
  const ShiftVector c = ShiftVector::random_interior(10, 2006);
  EXPECT_EQ(a.offsets, b.offsets);
  EXPECT_NE(a.offsets, c.offsets);
  for (double o : a.offsets) EXPECT_LE(std::abs(o), 80.0);
}

TEST(Registry, TableOneSettings) {
  struct Row {
    const char* id;
    std::size_t d;
    double lo, hi, ae;
  };
  const Row rows[] = {{"f1", 30, -5.12, 5.12, 1e-2}, {"f2", 30, -100, 100, 1e-1},
                      {"f3", 30, -1, 1, 1e-5},       {"f4", 30, -10, 10, 1e-5},
                      {"f5", 30, -5, 5, 1e-5},       {"f6", 2, -4.5, 4.5, 1e-5},
                      {"f7", 4, -10, 10, 1e-5},      {"f8", 4, -5, 5, 1e-5},
                      {"f9", 10, -100, 100, 1e-1}};
  for (const Row& r : rows) {
    const Problem p = problem_by_name(r.id);
    EXPECT_EQ(p.name, r.id);
    EXPECT_EQ(p.dimension, r.d) << r.id;
    EXPECT_EQ(p.bounds.lower, Vector(r.d, r.lo)) << r.id;
    EXPECT_EQ(p.bounds.upper, Vector(r.d, r.hi)) << r.id;
    EXPECT_EQ(p.acceptable_error, r.ae) << r.id;
  }
  EXPECT_EQ(problem_by_name("f1").title, "Zakharov");
  EXPECT_EQ(problem_by_name("f9").title, "Shifted Rosenbrock");
  EXPECT_EQ(problem_by_name("f9").optimum_value, 390.0);
  EXPECT_EQ(problem_by_name("f8").optimum_value, 3.07e-4);
  EXPECT_EQ(problem_by_name("f10").dimension, 3u);
}

TEST(Registry, AliasesResolveToCanonicalIds) {
  for (const auto& id : problem_names()) {
    EXPECT_EQ(problem_by_name(problem_alias(id)).name, id);
  }
  EXPECT_EQ(problem_by_name("BEALE").name, "f6");
  EXPECT_EQ(problem_names().size(), 10u);
}

TEST(Registry, UnknownNameListsValidNames) {
  try {
    problem_by_name("f99");
    FAIL() << "expected UnknownNameError";
  } catch (const UnknownNameError& e) {
    EXPECT_NE(std::string(e.what()).find("f10"), std::string::npos);
  }
}

TEST(Registry, ShiftOptionsAreHonoured) {
  ProblemOptions options;
  options.shift_offsets = Vector(10, 5.0);
  options.shift_bias = 0.0;
  const Problem p = problem_by_name("f9", options);
  EXPECT_EQ(p.optimum_value, 0.0);
  EXPECT_NEAR(p.evaluate(Vector(10, 5.0)), 0.0, 1e-12);
  options.shift_offsets = Vector(3, 0.0);
  EXPECT_THROW(problem_by_name("f9", options), ContractViolation);
}

TEST(Registry, OptimaEvaluateToTheirTabulatedValues) {
  EXPECT_EQ(problem_by_name("f1").evaluate(Vector(30, 0.0)), 0.0);
  EXPECT_NEAR(problem_by_name("f4").evaluate(Vector(30, -1.0)), 0.0, 1e-12);
  EXPECT_NEAR(problem_by_name("f5").evaluate(Vector(30, 1.0)), 0.0, 1e-12);
  EXPECT_EQ(problem_by_name("f6").evaluate(Vector{3.0, 0.5}), 0.0);
  EXPECT_EQ(problem_by_name("f7").evaluate(Vector(4, 1.0)), 0.0);
}

}  // namespace
}  // namespace abcopt

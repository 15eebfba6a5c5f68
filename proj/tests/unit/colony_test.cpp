#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "abcopt/benchmarks.hpp"
#include "abcopt/colony.hpp"

namespace abcopt {
namespace {

Colony make_colony(const Problem& p, const std::string& algo, std::uint64_t seed,
                   std::uint64_t budget = 200000) {
  return initialize_colony(p, VariantConfig::preset(algo), EvaluationBudget(budget), RandomStream(seed));
}

TEST(InitializeColony, ChargesOneEvaluationPerSource) {
  const Problem p = problem_by_name("f6");
  const Colony c = make_colony(p, "abc", 1);
  EXPECT_EQ(c.size(), 25u);
  EXPECT_EQ(c.budget.used(), 25u);
  for (const auto& s : c.sources) {
    EXPECT_EQ(s.trials, 0);
    EXPECT_EQ(s.objective, p.evaluate(s.position));
  }
  EXPECT_EQ(c.best.objective, c.sources[c.best_index()].objective);
}

TEST(InitializeColony, SameSeedSameColony) {
  const Problem p = problem_by_name("f1");
  const Colony a = make_colony(p, "abc", 9);
  const Colony b = make_colony(p, "abc", 9);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.sources[i].position, b.sources[i].position);
}

TEST(InitializeColony, IdenticalDrawsGiveIdenticalSources) {
  Problem p = problem_by_name("f6");
  // A grid coarser than the box snaps every draw to the origin.
  p.granularity = {100.0, 100.0};
  const Colony c = make_colony(p, "abc", 3);
  for (const auto& s : c.sources) {
    EXPECT_EQ(s.position, (Vector{0.0, 0.0}));
    EXPECT_EQ(s.objective, c.best.objective);
  }
}

TEST(InitializeColony, TooSmallBudgetThrows) {
  const Problem p = problem_by_name("f6");
  EXPECT_THROW(make_colony(p, "abc", 1, 24), InitializationBudgetError);
}

TEST(Fitness, BranchRule) {
  EXPECT_EQ(fitness_branch(0.0), 1.0);
  EXPECT_EQ(fitness_branch(0.5), 0.5);
  EXPECT_EQ(fitness_branch(-2.0), 1.5);
  RandomStream rng(5);
  for (int t = 0; t < 10000; ++t) {
    const double a = rng.uniform(0, 100);
    const double b = rng.uniform(0, 100);
    if (a < b) EXPECT_GT(fitness_branch(a), fitness_branch(b));
    // Negative objectives always outrank non-negative ones.
    EXPECT_GT(fitness_branch(-a - 1e-9), fitness_branch(b));
  }
}

TEST(Fitness, ClassicalRule) {
  EXPECT_EQ(fitness_classical(0.0), 1.0);
  EXPECT_EQ(fitness_classical(1.0), 0.5);
  EXPECT_EQ(fitness_classical(-2.0), 3.0);
}

TEST(Fitness, RankRule) {
  EXPECT_DOUBLE_EQ(rank_fitness(1, 5, 1.5), 0.5);
  EXPECT_DOUBLE_EQ(rank_fitness(5, 5, 1.5), 1.5);
  for (std::size_t r = 1; r <= 7; ++r) EXPECT_DOUBLE_EQ(rank_fitness(r, 7, 1.0), 1.0);
  double total = 0;
  for (std::size_t r = 1; r <= 25; ++r) total += rank_fitness(r, 25, 1.7);
  EXPECT_NEAR(total, 25.0, 1e-12);
  EXPECT_THROW(rank_fitness(0, 5, 1.5), ContractViolation);
}

TEST(Fitness, RankAssignmentGivesBestTheHighestFitness) {
  const Problem p = problem_by_name("f6");
  Colony c = make_colony(p, "hjabc", 2);
  assign_fitness(c);
  const std::size_t b = c.best_index();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != b) EXPECT_LT(c.sources[i].fitness, c.sources[b].fitness);
  }
}

TEST(SelectionProbabilities, Examples) {
  EXPECT_EQ(selection_probabilities(std::vector<double>{1, 1, 1, 1}), (Vector{0.25, 0.25, 0.25, 0.25}));
  EXPECT_EQ(selection_probabilities(std::vector<double>{3, 1}), (Vector{0.75, 0.25}));
  EXPECT_EQ(selection_probabilities(std::vector<double>{0, 0}), (Vector{0.5, 0.5}));
  EXPECT_THROW(selection_probabilities(std::vector<double>{}), ContractViolation);
  EXPECT_THROW(selection_probabilities(std::vector<double>{1, -1}), ContractViolation);
}

// Exact expected visit counts of the cyclic scan. With m acceptances left and
// the scan at i, E(m, i) = p_i ([i = k] + E(m-1, i+1)) + (1 - p_i) E(m, i+1);
// unrolling one full cycle gives a closed form for each m.
Vector expected_visits(const Vector& p, std::size_t visits) {
  const std::size_t n = p.size();
  std::vector<Vector> prev(n, Vector(n, 0.0));  // prev[i][k] = E(m-1, i) for source k
  for (std::size_t m = 1; m <= visits; ++m) {
    std::vector<Vector> cur(n, Vector(n, 0.0));
    double q_all = 1.0;
    for (double pi : p) q_all *= 1.0 - pi;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0, carry = 1.0;
        for (std::size_t t = 0; t < n; ++t) {
          const std::size_t s = (i + t) % n;
          sum += carry * p[s] * ((s == k ? 1.0 : 0.0) + prev[(s + 1) % n][k]);
          carry *= 1.0 - p[s];
        }
        cur[i][k] = sum / (1.0 - q_all);
      }
    }
    prev = std::move(cur);
  }
  return prev[0];
}

TEST(OnlookerVisits, FrequenciesMatchExactScanExpectation) {
  const Vector p = selection_probabilities(std::vector<double>{10, 1, 3, 1, 5});
  const Vector expected = expected_visits(p, p.size());
  EXPECT_NEAR(std::accumulate(expected.begin(), expected.end(), 0.0), 5.0, 1e-12);
  RandomStream rng(17);
  std::vector<double> counts(p.size(), 0.0);
  const int phases = 20000;
  for (int t = 0; t < phases; ++t) {
    for (std::size_t i : onlooker_visits(p, p.size(), rng)) counts[i] += 1;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_NEAR(counts[i] / phases, expected[i], 0.05 * expected[i]) << i;
  }
}

TEST(OnlookerVisits, DominantSourceTakesNearlyEveryVisit) {
  const Vector p = selection_probabilities(std::vector<double>{1e6, 1, 1, 1});
  RandomStream rng(3);
  int dominant = 0, total = 0;
  for (int t = 0; t < 10000; ++t) {
    for (std::size_t i : onlooker_visits(p, 4, rng)) {
      dominant += i == 0;
      ++total;
    }
  }
  EXPECT_NEAR(static_cast<double>(dominant) / total, p[0], 0.05);
}

TEST(NeighbourMove, Examples) {
  const Vector xi{1.0, 5.0}, xk{0.0, 2.0}, best{9.0, 9.0};
  EXPECT_EQ(neighbour_move(xi, xk, best, 0, 0.0, 0.0), xi);
  EXPECT_EQ(neighbour_move(xi, xi, best, 1, 0.7, 0.0), xi);
  EXPECT_EQ(neighbour_move(xi, xk, best, 0, 0.5, 0.0), (Vector{1.5, 5.0}));
  EXPECT_EQ(neighbour_move(Vector{0.0}, Vector{1.0}, Vector{2.0}, 0, 1.0, 0.5), Vector{0.0});
  EXPECT_EQ(neighbour_move(xi, xk, xi, 0, 0.5, 1.3), neighbour_move(xi, xk, xi, 0, 0.5, 0.0));
}

TEST(Updates, ChangeOneCoordinateInsideBounds) {
  const Problem p = problem_by_name("f1");
  for (const char* algo : {"abc", "gabc"}) {
    Colony c = make_colony(p, algo, 21);
    for (int t = 0; t < 2000; ++t) {
      const std::size_t i = c.rng.index(c.size());
      const Vector v = std::string(algo) == "abc" ? classic_update(c, i) : gbest_update(c, i);
      int changed = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        changed += v[j] != c.sources[i].position[j];
        EXPECT_GE(v[j], p.bounds.lower[j]);
        EXPECT_LE(v[j], p.bounds.upper[j]);
      }
      EXPECT_LE(changed, 1);
    }
  }
}

TEST(GreedySelect, StrictImprovementOnly) {
  FoodSource s{{0.0}, 1.0, 0.0, 3};
  EXPECT_FALSE(greedy_select(s, Vector{1.0}, 1.0));
  EXPECT_EQ(s.trials, 4);
  EXPECT_EQ(s.position, Vector{0.0});
  EXPECT_FALSE(greedy_select(s, Vector{1.0}, 2.0));
  EXPECT_EQ(s.trials, 5);
  EXPECT_TRUE(greedy_select(s, Vector{2.0}, 0.5));
  EXPECT_EQ(s.trials, 0);
  EXPECT_EQ(s.objective, 0.5);
  EXPECT_EQ(s.position, Vector{2.0});
}

TEST(Phases, ExhaustedBudgetLeavesColonyUnchanged) {
  const Problem p = problem_by_name("f6");
  Colony c = make_colony(p, "rmabc", 4, 25);
  const auto before = c.sources;
  employed_phase(c);
  onlooker_phase(c);
  scout_phase(c);
  memetic_phase(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c.sources[i].position, before[i].position);
    EXPECT_EQ(c.sources[i].trials, before[i].trials);
  }
  EXPECT_EQ(c.budget.used(), 25u);
}

TEST(Phases, EmployedAndOnlookerNeverWorsenASource) {
  const Problem p = problem_by_name("f4");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Colony c = make_colony(p, seed % 2 ? "abc" : "gabc", seed);
    for (int cycle = 0; cycle < 10; ++cycle) {
      auto before = c.sources;
      employed_phase(c);
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_LE(c.sources[i].objective, before[i].objective);
      before = c.sources;
      onlooker_phase(c);
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_LE(c.sources[i].objective, before[i].objective);
    }
  }
}

TEST(Phases, EmployedChargesOneEvaluationPerSource) {
  const Problem p = problem_by_name("f6");
  Colony c = make_colony(p, "abc", 8);
  employed_phase(c);
  EXPECT_EQ(c.budget.used(), 50u);
  onlooker_phase(c);
  EXPECT_EQ(c.budget.used(), 75u);
}

TEST(ScoutPhase, ReplacesOnlyTheMostAbandonedSource) {
  const Problem p = problem_by_name("f6");
  Colony c = make_colony(p, "abc", 5);
  const int limit = c.config.limit;
  EXPECT_FALSE(scout_phase(c).has_value());

  c.sources[3].trials = limit;
  EXPECT_FALSE(scout_phase(c).has_value());

  c.sources[3].trials = limit + 1;
  const Vector old = c.sources[3].position;
  ASSERT_EQ(scout_phase(c), std::optional<std::size_t>(3));
  EXPECT_EQ(c.sources[3].trials, 0);
  EXPECT_NE(c.sources[3].position, old);

  c.sources[4].trials = limit + 2;
  c.sources[9].trials = limit + 5;
  EXPECT_EQ(scout_phase(c), std::optional<std::size_t>(9));
  EXPECT_EQ(c.sources[4].trials, limit + 2);

  c.sources[2].trials = limit + 2;
  EXPECT_EQ(scout_phase(c), std::optional<std::size_t>(2));
}

TEST(Run, StopsImmediatelyWhenInitialColonySolves) {
  Problem p = problem_by_name("f6");
  p.acceptable_error = 1e9;
  const RunResult r = run(p, VariantConfig::preset("rmabc"), 200000, 1);
  EXPECT_EQ(r.record.evaluations, 25u);
  EXPECT_EQ(r.cycles, 0);
  EXPECT_TRUE(r.record.success);
}

TEST(Run, BudgetEqualToColonyReturnsInitialBest) {
  const Problem p = problem_by_name("f1");
  const VariantConfig v = VariantConfig::preset("abc");
  const Colony c = make_colony(p, "abc", 6);
  const RunResult r = run(p, v, 25, 6);
  EXPECT_EQ(r.record.evaluations, 25u);
  EXPECT_EQ(r.record.best_objective, c.best.objective);
  EXPECT_FALSE(r.record.success);
}

TEST(Run, RecordFieldsAreConsistent) {
  const Problem p = problem_by_name("f6");
  const RunResult r = run(p, VariantConfig::preset("rmabc"), 200000, 1);
  EXPECT_EQ(r.record.algorithm, "rmabc");
  EXPECT_EQ(r.record.problem, "f6");
  EXPECT_EQ(r.record.seed, 1u);
  EXPECT_EQ(r.record.error, std::abs(r.record.best_objective - p.optimum_value));
  EXPECT_EQ(r.record.success, r.record.error <= p.acceptable_error);
  EXPECT_EQ(p.evaluate(r.best_position), r.record.best_objective);
}

TEST(Run, RmabcSolvesBealeQuickly) {
  const Problem p = problem_by_name("f6");
  int solved = 0;
  double evaluations = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RunResult r = run(p, VariantConfig::preset("rmabc"), 200000, seed);
    solved += r.record.success;
    evaluations += static_cast<double>(r.record.evaluations);
  }
  EXPECT_EQ(solved, 20);
  EXPECT_LT(evaluations / 20, 5000);
}

TEST(Run, ObserverSeesEveryPhaseInOrder) {
  const Problem p = problem_by_name("f6");
  std::vector<CyclePoint> points;
  const RunResult r = run(p, VariantConfig::preset("meabc"), 2000, 3,
                          [&](const Colony&, CyclePoint pt) { points.push_back(pt); });
  ASSERT_FALSE(points.empty());
  EXPECT_EQ(points.front(), CyclePoint::initialized);
  EXPECT_EQ(points.size(), 1u + 4u * static_cast<std::size_t>(r.cycles));
  for (std::size_t i = 1; i < points.size(); ++i) {
    EXPECT_EQ(static_cast<int>(points[i]), static_cast<int>((i - 1) % 4) + 1);
  }
}

}  // namespace
}  // namespace abcopt

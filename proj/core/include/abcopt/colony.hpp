#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "abcopt/problem.hpp"
#include "abcopt/run_record.hpp"
#include "abcopt/variant.hpp"

namespace abcopt {

struct FoodSource {
  Vector position;
  double objective = 0.0;
  double fitness = 0.0;
  int trials = 0;
};

struct BestSoFar {
  Vector position;
  double objective = 0.0;
};

class InitializationBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Population state for one run. Holds a non-owning pointer to the problem,
/// which must outlive the colony.
struct Colony {
  const Problem* problem = nullptr;
  VariantConfig config;
  EvaluationBudget budget;
  RandomStream rng;
  std::vector<FoodSource> sources;
  BestSoFar best;
  int cycle = 0;

  Evaluator evaluator() { return Evaluator(*problem, budget); }
  std::size_t size() const noexcept { return sources.size(); }
  /// Index of the source with the smallest objective (lowest index on ties).
  std::size_t best_index() const;
};

Colony initialize_colony(const Problem& problem, const VariantConfig& config,
                         EvaluationBudget budget, RandomStream rng);

// Fitness rules. Larger fitness means a better (smaller) objective.
double fitness_branch(double objective);
double fitness_classical(double objective);
/// rank 1 is the worst solution, rank n the best.
double rank_fitness(std::size_t rank, std::size_t n, double selection_pressure);

/// Recomputes every source's fitness under config.fitness_rule.
void assign_fitness(Colony& colony);

/// p_i = fit_i / sum(fit); uniform when every fitness is zero.
std::vector<double> selection_probabilities(std::span<const double> fitness);
std::vector<double> selection_probabilities(const Colony& colony);

/// Source indices visited by the onlooker bees: cycle through the sources,
/// accepting source i when a uniform draw is below p_i, until `visits`
/// acceptances have been made.
std::vector<std::size_t> onlooker_visits(std::span<const double> probabilities, std::size_t visits,
                                         RandomStream& rng);

/// x_i with dimension j moved by phi (x_ij - x_kj) + psi (best_j - x_ij).
/// psi = 0 gives the classic neighbour move. The result is not projected.
Vector neighbour_move(std::span<const double> xi, std::span<const double> xk,
                      std::span<const double> best, std::size_t j, double phi, double psi);

/// Classic neighbour move on one random dimension with a random partner,
/// projected onto the problem's bounds/granularity.
Vector classic_update(Colony& colony, std::size_t i);
/// Same as classic_update plus attraction towards the best-so-far.
Vector gbest_update(Colony& colony, std::size_t i);

/// Strict-improvement replacement. Returns true when the candidate was taken.
bool greedy_select(FoodSource& source, const Vector& candidate, double candidate_objective);

void employed_phase(Colony& colony);
void onlooker_phase(Colony& colony);
/// Replaces at most one abandoned source (trials > limit; the one with the
/// most trials, lowest index on ties). Returns the replaced index, if any.
std::optional<std::size_t> scout_phase(Colony& colony);
/// Dispatches on config.memetic_phase.
void memetic_phase(Colony& colony);
/// Refreshes colony.best from the current sources.
void memorize_best(Colony& colony);

enum class CyclePoint { initialized, employed, onlooker, scout, memetic };

/// Called after initialization and after every phase of every cycle.
using ColonyObserver = std::function<void(const Colony&, CyclePoint)>;

struct RunResult {
  RunRecord record;
  Vector best_position;
  int cycles = 0;
};

/// Full optimization loop: employed, onlooker, scout, memetic, until the
/// budget runs out or the best-so-far is within the acceptable error.
RunResult run(const Problem& problem, const VariantConfig& config, std::uint64_t max_evaluations,
              std::uint64_t seed, const ColonyObserver& observer = {});

}  // namespace abcopt

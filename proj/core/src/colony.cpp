#include "abcopt/colony.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "abcopt/memetic.hpp"

namespace abcopt {

std::size_t Colony::best_index() const {
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    if (sources[i].objective < sources[best_i].objective) best_i = i;
  }
  return best_i;
}

Colony initialize_colony(const Problem& problem, const VariantConfig& config,
                         EvaluationBudget budget, RandomStream rng) {
  config.validate();
  const auto sn = static_cast<std::size_t>(config.food_sources());
  if (budget.remaining() < sn) {
    throw InitializationBudgetError("budget of " + std::to_string(budget.remaining()) +
                                    " evaluations cannot initialize " + std::to_string(sn) +
                                    " food sources");
  }
  Colony colony{&problem, config, budget, rng, {}, {}, 0};
  colony.sources.reserve(sn);
  Evaluator evaluate = colony.evaluator();
  for (std::size_t i = 0; i < sn; ++i) {
    FoodSource s;
    s.position = sample_uniform_position(problem, colony.rng);
    s.objective = *evaluate(s.position);
    colony.sources.push_back(std::move(s));
  }
  const std::size_t b = colony.best_index();
  colony.best = {colony.sources[b].position, colony.sources[b].objective};
  assign_fitness(colony);
  return colony;
}

double fitness_branch(double objective) {
  if (objective >= 0.0) return 1.0 / (2.0 * objective + 1.0);
  return 1.0 + std::abs(1.0 / objective);
}

double fitness_classical(double objective) {
  if (objective >= 0.0) return 1.0 / (1.0 + objective);
  return 1.0 + std::abs(objective);
}

double rank_fitness(std::size_t rank, std::size_t n, double selection_pressure) {
  if (n < 2) return 1.0;
  if (rank < 1 || rank > n) throw ContractViolation("rank_fitness: rank out of range");
  const double sp = selection_pressure;
  return 2.0 - sp + 2.0 * (sp - 1.0) * static_cast<double>(rank - 1) / static_cast<double>(n - 1);
}

void assign_fitness(Colony& colony) {
  auto& sources = colony.sources;
  switch (colony.config.fitness_rule) {
    case FitnessRule::branch:
      for (auto& s : sources) s.fitness = fitness_branch(s.objective);
      break;
    case FitnessRule::classical:
      for (auto& s : sources) s.fitness = fitness_classical(s.objective);
      break;
    case FitnessRule::rank: {
      std::vector<std::size_t> order(sources.size());
      std::iota(order.begin(), order.end(), 0);
      // Worst first, so position p in `order` has rank p + 1.
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sources[a].objective > sources[b].objective;
      });
      for (std::size_t p = 0; p < order.size(); ++p) {
        sources[order[p]].fitness =
            rank_fitness(p + 1, order.size(), colony.config.selection_pressure);
      }
      break;
    }
  }
}

std::vector<double> selection_probabilities(std::span<const double> fitness) {
  if (fitness.empty()) throw ContractViolation("selection_probabilities: empty colony");
  double total = 0.0;
  for (double f : fitness) {
    if (f < 0.0) throw ContractViolation("selection_probabilities: negative fitness");
    total += f;
  }
  std::vector<double> p(fitness.size());
  if (total == 0.0) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return p;
  }
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = fitness[i] / total;
  return p;
}

std::vector<double> selection_probabilities(const Colony& colony) {
  std::vector<double> fit(colony.sources.size());
  for (std::size_t i = 0; i < fit.size(); ++i) fit[i] = colony.sources[i].fitness;
  return selection_probabilities(fit);
}

std::vector<std::size_t> onlooker_visits(std::span<const double> probabilities, std::size_t visits,
                                         RandomStream& rng) {
  if (std::none_of(probabilities.begin(), probabilities.end(), [](double p) { return p > 0.0; })) {
    throw ContractViolation("onlooker_visits: no source has positive probability");
  }
  std::vector<std::size_t> out;
  out.reserve(visits);
  std::size_t i = 0;
  while (out.size() < visits) {
    if (rng.uniform01() < probabilities[i]) out.push_back(i);
    i = (i + 1) % probabilities.size();
  }
  return out;
}

Vector neighbour_move(std::span<const double> xi, std::span<const double> xk,
                      std::span<const double> best, std::size_t j, double phi, double psi) {
  Vector v(xi.begin(), xi.end());
  v[j] = xi[j] + phi * (xi[j] - xk[j]);
  if (psi != 0.0) v[j] += psi * (best[j] - xi[j]);
  return v;
}

namespace {

Vector perturb(Colony& colony, std::size_t i, bool attract) {
  if (colony.sources.size() < 2) {
    throw ContractViolation("neighbour update needs at least two food sources");
  }
  RandomStream& rng = colony.rng;
  const std::size_t j = rng.index(colony.problem->dimension);
  const std::size_t k = rng.index_except(colony.sources.size(), i);
  const double phi = rng.uniform(-1.0, 1.0);
  const double psi = attract ? rng.uniform(0.0, colony.config.attraction_bound) : 0.0;
  const Vector v = neighbour_move(colony.sources[i].position, colony.sources[k].position,
                                  colony.best.position, j, phi, psi);
  return colony.problem->project(v);
}

Vector update(Colony& colony, std::size_t i, UpdateRule rule) {
  return rule == UpdateRule::gbest ? gbest_update(colony, i) : classic_update(colony, i);
}

// Evaluates the update for source i and applies greedy selection. Returns
// false when the budget is exhausted.
bool visit(Colony& colony, std::size_t i, UpdateRule rule) {
  if (colony.budget.exhausted()) return false;
  Vector candidate = update(colony, i, rule);
  const auto value = colony.evaluator()(candidate);
  if (!value) return false;
  greedy_select(colony.sources[i], candidate, *value);
  return true;
}

}  // namespace

Vector classic_update(Colony& colony, std::size_t i) { return perturb(colony, i, false); }

Vector gbest_update(Colony& colony, std::size_t i) { return perturb(colony, i, true); }

bool greedy_select(FoodSource& source, const Vector& candidate, double candidate_objective) {
  if (candidate_objective < source.objective) {
    source.position = candidate;
    source.objective = candidate_objective;
    source.trials = 0;
    return true;
  }
  ++source.trials;
  return false;
}

void employed_phase(Colony& colony) {
  for (std::size_t i = 0; i < colony.sources.size(); ++i) {
    if (!visit(colony, i, colony.config.employed_rule)) break;
  }
  memorize_best(colony);
}

void onlooker_phase(Colony& colony) {
  if (colony.budget.exhausted()) return;
  assign_fitness(colony);
  const std::vector<double> p = selection_probabilities(colony);
  const std::size_t sn = colony.sources.size();
  // Same scan as onlooker_visits, interleaved with the updates so that each
  // visit sees the sources as modified by the previous ones.
  std::size_t placed = 0;
  std::size_t i = 0;
  while (placed < sn) {
    if (colony.rng.uniform01() < p[i]) {
      if (!visit(colony, i, colony.config.onlooker_rule)) break;
      ++placed;
    }
    i = (i + 1) % sn;
  }
  memorize_best(colony);
}

std::optional<std::size_t> scout_phase(Colony& colony) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < colony.sources.size(); ++i) {
    if (colony.sources[i].trials > colony.sources[worst].trials) worst = i;
  }
  FoodSource& s = colony.sources[worst];
  if (s.trials <= colony.config.limit || colony.budget.exhausted()) return std::nullopt;
  Vector x = sample_uniform_position(*colony.problem, colony.rng);
  const auto value = colony.evaluator()(x);
  if (!value) return std::nullopt;
  s.position = std::move(x);
  s.objective = *value;
  s.trials = 0;
  memorize_best(colony);
  return worst;
}

void memetic_phase(Colony& colony) {
  switch (colony.config.memetic_phase) {
    case MemeticPhase::none: break;
    case MemeticPhase::gss: meabc_memetic_phase(colony); break;
    case MemeticPhase::randomized_gss: rmabc_memetic_phase(colony); break;
    case MemeticPhase::hooke_jeeves: hjabc_memetic_phase(colony); break;
  }
  memorize_best(colony);
}

void memorize_best(Colony& colony) {
  const std::size_t b = colony.best_index();
  if (colony.sources[b].objective < colony.best.objective) {
    colony.best = {colony.sources[b].position, colony.sources[b].objective};
  }
}

namespace {

RunResult finish(const Colony& colony, const Problem& problem, int cycles) {
  RunResult r;
  r.record.algorithm = colony.config.name;
  r.record.problem = problem.name;
  r.record.seed = colony.rng.seed();
  r.record.evaluations = colony.budget.used();
  r.record.best_objective = colony.best.objective;
  r.record.error = std::abs(colony.best.objective - problem.optimum_value);
  r.record.success = r.record.error <= problem.acceptable_error;
  r.best_position = colony.best.position;
  r.cycles = cycles;
  return r;
}

bool solved(const Colony& colony, const Problem& problem) {
  return std::abs(colony.best.objective - problem.optimum_value) <= problem.acceptable_error;
}

}  // namespace

RunResult run(const Problem& problem, const VariantConfig& config, std::uint64_t max_evaluations,
              std::uint64_t seed, const ColonyObserver& observer) {
  Colony colony = initialize_colony(problem, config, EvaluationBudget(max_evaluations),
                                    RandomStream(seed));
  auto notify = [&](CyclePoint point) {
    if (observer) observer(colony, point);
  };
  notify(CyclePoint::initialized);
  while (!solved(colony, problem) && !colony.budget.exhausted()) {
    ++colony.cycle;
    employed_phase(colony);
    notify(CyclePoint::employed);
    onlooker_phase(colony);
    notify(CyclePoint::onlooker);
    scout_phase(colony);
    notify(CyclePoint::scout);
    memetic_phase(colony);
    notify(CyclePoint::memetic);
  }
  return finish(colony, problem, colony.cycle);
}

}  // namespace abcopt

#include "abcopt/memetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace abcopt {

std::pair<double, double> gss_points(const GssInterval& interval) {
  const double a = interval.a;
  const double b = interval.b;
  return {b - (b - a) * kGoldenRatio, a + (b - a) * kGoldenRatio};
}

std::pair<double, double> randomized_gss_points(const GssInterval& interval, double phi1,
                                                double phi2) {
  if (!(phi1 >= 0.0 && phi1 <= 1.0)) throw ContractViolation("phi1 must lie in [0, 1]");
  if (!(phi2 >= -1.0 && phi2 <= 0.0)) throw ContractViolation("phi2 must lie in [-1, 0]");
  const auto [f1, f2] = gss_points(interval);
  return {phi1 * f1, phi2 * f2};
}

Vector memetic_candidate(std::span<const double> best, std::span<const double> partner, double step,
                         const Problem& problem) {
  if (best.size() != partner.size()) throw ContractViolation("memetic_candidate: dimension mismatch");
  Vector x(best.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = best[j] + step * (best[j] - partner[j]);
  return problem.project(x);
}

Vector memetic_candidate(std::span<const double> best, std::span<const double> partner, double step,
                         const Problem& problem, double perturbation_rate, RandomStream& rng) {
  if (best.size() != partner.size()) throw ContractViolation("memetic_candidate: dimension mismatch");
  Vector x(best.begin(), best.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (rng.uniform01() >= perturbation_rate) x[j] = best[j] + step * (best[j] - partner[j]);
  }
  return problem.project(x);
}

namespace {

struct Probe {
  Vector position;
  std::optional<double> value;
};

Probe probe(Colony& colony, std::size_t best_i, double step) {
  const std::size_t partner = colony.rng.index_except(colony.sources.size(), best_i);
  Probe p;
  p.position = memetic_candidate(colony.sources[best_i].position, colony.sources[partner].position,
                                 step, *colony.problem, colony.config.memetic.perturbation_rate,
                                 colony.rng);
  p.value = colony.evaluator()(p.position);
  return p;
}

bool improve(Colony& colony, std::size_t best_i, Probe& p, MemeticStats& stats) {
  FoodSource& s = colony.sources[best_i];
  if (!p.value || !(*p.value < s.objective)) return false;
  s.position = std::move(p.position);
  s.objective = *p.value;
  s.trials = 0;
  ++stats.improvements;
  return true;
}

// Shared loop of the two golden-section phases; `points` maps the current
// interval to the two step sizes.
template <typename PointRule>
MemeticStats golden_section_phase(Colony& colony, PointRule points) {
  MemeticStats stats;
  if (colony.sources.size() < 2) return stats;
  const MemeticConfig& cfg = colony.config.memetic;
  GssInterval interval;
  while (interval.width() > cfg.epsilon && stats.inner_iterations < cfg.max_inner_iterations &&
         !colony.budget.exhausted()) {
    ++stats.inner_iterations;
    const auto [step1, step2] = points(interval);
    const std::size_t best_i = colony.best_index();

    Probe first = probe(colony, best_i, step1);
    if (!first.value) break;
    ++stats.evaluations;
    Probe second = probe(colony, best_i, step2);
    if (!second.value) {
      improve(colony, best_i, first, stats);
      break;
    }
    ++stats.evaluations;

    if (*first.value < *second.value) {
      interval.b = step2;
      improve(colony, best_i, first, stats);
    } else {
      interval.a = step1;
      improve(colony, best_i, second, stats);
    }
    if (interval.a > interval.b) std::swap(interval.a, interval.b);
  }
  memorize_best(colony);
  return stats;
}

}  // namespace

MemeticStats meabc_memetic_phase(Colony& colony) {
  return golden_section_phase(colony, [](const GssInterval& iv) { return gss_points(iv); });
}

MemeticStats rmabc_memetic_phase(Colony& colony) {
  const MemeticConfig& cfg = colony.config.memetic;
  return golden_section_phase(colony, [&](const GssInterval& iv) {
    const double phi1 = colony.rng.uniform(cfg.phi1_low, cfg.phi1_high);
    const double phi2 = colony.rng.uniform(cfg.phi2_low, cfg.phi2_high);
    return randomized_gss_points(iv, phi1, phi2);
  });
}

Vector hjabc_raw_delta(std::span<const Vector> selected, std::span<const double> best) {
  if (selected.empty()) throw ContractViolation("hjabc_delta: no selected solutions");
  Vector delta(best.size(), 0.0);
  for (const Vector& x : selected) {
    if (x.size() != best.size()) throw ContractViolation("hjabc_delta: dimension mismatch");
    for (std::size_t j = 0; j < delta.size(); ++j) delta[j] += x[j] - best[j];
  }
  const double m = static_cast<double>(selected.size());
  for (double& d : delta) d = 0.1 * d / m;
  return delta;
}

Vector hjabc_delta(std::span<const Vector> selected, std::span<const double> best, double floor) {
  Vector delta = hjabc_raw_delta(selected, best);
  for (double& d : delta) d = std::max(std::abs(d), floor);
  return delta;
}

namespace {

class PatternSearch {
 public:
  PatternSearch(const Problem& problem, EvaluationBudget& budget) : evaluate_(problem, budget) {}

  int evaluations() const { return evaluations_; }
  bool out_of_budget() const { return out_of_budget_; }

  std::optional<double> value(const Vector& x) {
    auto v = evaluate_(x);
    if (!v) {
      out_of_budget_ = true;
    } else {
      ++evaluations_;
    }
    return v;
  }

  // Probes +step then -step along every coordinate, keeping improvements.
  void explore(Vector& x, double& fx, const Vector& step) {
    const Problem& problem = evaluate_.problem();
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (const double sign : {1.0, -1.0}) {
        Vector trial = x;
        trial[j] += sign * step[j];
        trial = problem.project(trial);
        if (trial == x) continue;
        const auto ft = value(trial);
        if (!ft) return;
        if (*ft < fx) {
          x = std::move(trial);
          fx = *ft;
          break;
        }
      }
    }
  }

 private:
  Evaluator evaluate_;
  int evaluations_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace

HookeJeevesResult hooke_jeeves(std::span<const double> start, double start_objective, Vector step,
                               double epsilon, const Problem& problem, EvaluationBudget& budget) {
  if (step.size() != start.size()) throw ContractViolation("hooke_jeeves: step dimension mismatch");
  for (double s : step) {
    if (!(s > 0.0)) throw ContractViolation("hooke_jeeves: steps must be positive");
  }
  PatternSearch search(problem, budget);
  Vector base(start.begin(), start.end());
  double f_base = start_objective;

  while (*std::max_element(step.begin(), step.end()) > epsilon && !search.out_of_budget()) {
    Vector x = base;
    double fx = f_base;
    search.explore(x, fx, step);
    if (!(fx < f_base)) {
      if (search.out_of_budget()) break;
      for (double& s : step) s *= 0.5;
      continue;
    }
    // Pattern moves: keep extrapolating while exploration around the
    // extrapolated point beats the current base.
    while (fx < f_base) {
      Vector previous = std::move(base);
      base = std::move(x);
      f_base = fx;
      Vector pattern(base.size());
      for (std::size_t j = 0; j < base.size(); ++j) pattern[j] = 2.0 * base[j] - previous[j];
      pattern = problem.project(pattern);
      const auto f_pattern = search.value(pattern);
      if (!f_pattern) break;
      x = std::move(pattern);
      fx = *f_pattern;
      search.explore(x, fx, step);
    }
  }
  return {std::move(base), f_base, search.evaluations()};
}

MemeticStats hjabc_memetic_phase(Colony& colony) {
  MemeticStats stats;
  const MemeticConfig& cfg = colony.config.memetic;
  if (colony.cycle % cfg.hj_interval != 0 || colony.budget.exhausted()) return stats;

  const std::size_t sn = colony.sources.size();
  std::vector<std::size_t> order(sn);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return colony.sources[a].objective < colony.sources[b].objective;
  });

  const std::size_t m = std::max<std::size_t>(1, sn / 2);
  std::vector<Vector> selected;
  selected.reserve(m);
  for (std::size_t r = 0; r < m; ++r) selected.push_back(colony.sources[order[r]].position);
  const FoodSource& best = colony.sources[order.front()];
  Vector step = hjabc_delta(selected, best.position, cfg.hj_step_floor);

  HookeJeevesResult refined =
      hooke_jeeves(best.position, best.objective, std::move(step), cfg.epsilon, *colony.problem,
                   colony.budget);
  stats.inner_iterations = 1;
  stats.evaluations = refined.evaluations;
  if (refined.objective < best.objective) {
    FoodSource& median = colony.sources[order[sn / 2]];
    median.position = std::move(refined.position);
    median.objective = refined.objective;
    median.trials = 0;
    ++stats.improvements;
  }
  memorize_best(colony);
  return stats;
}

}  // namespace abcopt

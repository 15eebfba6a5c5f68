#include "abcopt/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "abcopt/colony.hpp"

namespace abcopt {

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
  if (config.runs < 1) throw ConfigError("runs must be positive");
  if (config.algorithms.empty()) throw ConfigError("no algorithms configured");
  if (config.problems.empty()) throw ConfigError("no problems configured");

  std::vector<VariantConfig> variants;
  std::vector<Problem> problems;
  try {
    for (const auto& a : config.algorithms) {
      VariantConfig v = VariantConfig::preset(a);
      v.colony_size = config.colony_size;
      v.limit = config.limit;
      v.memetic.epsilon = config.memetic_epsilon;
      v.validate();
      variants.push_back(std::move(v));
    }
    for (const auto& p : config.problems) problems.push_back(problem_by_name(p, config.problem_options));
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  const std::size_t runs = static_cast<std::size_t>(config.runs);
  const std::size_t total = variants.size() * problems.size() * runs;
  std::vector<RunRecord> records(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const std::size_t r = task % runs;
      const std::size_t p = (task / runs) % problems.size();
      const std::size_t a = task / (runs * problems.size());
      try {
        records[task] = run(problems[p], variants[a], config.budget,
                            config.seed_for_run(static_cast<int>(r + 1)))
                            .record;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(total)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

Summary summarize(std::span<const RunRecord> records) {
  if (records.empty()) throw ContractViolation("summarize: no records");
  Summary s;
  s.algorithm = records.front().algorithm;
  s.problem = records.front().problem;
  s.runs = static_cast<int>(records.size());
  // Sort the per-run values so the floating-point sums do not depend on the
  // order records arrive in.
  std::vector<double> errors;
  std::vector<std::uint64_t> evaluations;
  for (const auto& r : records) {
    errors.push_back(r.error);
    evaluations.push_back(r.evaluations);
    if (r.success) ++s.successes;
  }
  std::sort(errors.begin(), errors.end());
  const double n = static_cast<double>(records.size());
  double total_error = 0.0;
  for (double e : errors) total_error += e;
  s.me = total_error / n;
  double sq = 0.0;
  for (double e : errors) sq += (e - s.me) * (e - s.me);
  s.sd = std::sqrt(sq / n);
  std::uint64_t total_evals = 0;
  for (auto e : evaluations) total_evals += e;
  s.afe = static_cast<double>(total_evals) / n;
  s.sr = (100 * s.successes) / s.runs;
  return s;
}

std::vector<Summary> summarize_all(std::span<const RunRecord> records) {
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& r : records) {
    std::pair key{r.algorithm, r.problem};
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(std::move(key));
  }
  std::vector<Summary> out;
  for (const auto& [algorithm, problem] : keys) {
    std::vector<RunRecord> cell;
    for (const auto& r : records) {
      if (r.algorithm == algorithm && r.problem == problem) cell.push_back(r);
    }
    out.push_back(summarize(cell));
  }
  return out;
}

Sign compare_sign(const Summary& a, const Summary& b) {
  if (a.sr != b.sr) return a.sr > b.sr ? Sign::plus : Sign::minus;
  if (a.afe != b.afe) return a.afe < b.afe ? Sign::plus : Sign::minus;
  return a.me < b.me ? Sign::plus : Sign::minus;
}

std::string format_summary_grid(std::span<const Summary> summaries) {
  std::vector<std::string> algorithms;
  std::vector<std::string> problems;
  for (const auto& s : summaries) {
    if (std::find(algorithms.begin(), algorithms.end(), s.algorithm) == algorithms.end()) {
      algorithms.push_back(s.algorithm);
    }
    if (std::find(problems.begin(), problems.end(), s.problem) == problems.end()) {
      problems.push_back(s.problem);
    }
  }
  auto find = [&](const std::string& a, const std::string& p) -> const Summary* {
    for (const auto& s : summaries) {
      if (s.algorithm == a && s.problem == p) return &s;
    }
    return nullptr;
  };

  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-10s%-9s", "Problem", "Measure");
  out << buf;
  for (const auto& a : algorithms) {
    std::snprintf(buf, sizeof buf, "%14s", a.c_str());
    out << buf;
  }
  out << '\n';
  enum class Measure { sd, me, afe, sr };
  constexpr std::pair<Measure, const char*> kRows[] = {
      {Measure::sd, "SD"}, {Measure::me, "ME"}, {Measure::afe, "AFE"}, {Measure::sr, "SR"}};
  for (const auto& p : problems) {
    for (const auto& [measure, label] : kRows) {
      std::snprintf(buf, sizeof buf, "%-10s%-9s", measure == Measure::sd ? p.c_str() : "", label);
      out << buf;
      for (const auto& a : algorithms) {
        const Summary* s = find(a, p);
        if (!s) {
          std::snprintf(buf, sizeof buf, "%14s", "-");
        } else {
          switch (measure) {
            case Measure::sd: std::snprintf(buf, sizeof buf, "%14.2E", s->sd); break;
            case Measure::me: std::snprintf(buf, sizeof buf, "%14.2E", s->me); break;
            case Measure::afe: std::snprintf(buf, sizeof buf, "%14.2f", s->afe); break;
            case Measure::sr: std::snprintf(buf, sizeof buf, "%14d", s->sr); break;
          }
        }
        out << buf;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace abcopt

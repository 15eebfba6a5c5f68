#include "config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace abcopt::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(std::size_t line_no, const std::string& message) {
  throw ConfigError("line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> parse_list(std::string value, std::size_t line_no) {
  if (!value.empty() && value.front() == '[') {
    if (value.back() != ']') fail(line_no, "unterminated list");
    value = value.substr(1, value.size() - 2);
  }
  std::vector<std::string> items;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(line_no, "empty list item");
    items.push_back(item);
  }
  if (items.empty()) fail(line_no, "empty list");
  return items;
}

template <typename T>
T parse_number(const std::string& value, std::size_t line_no, const std::string& key) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    fail(line_no, "invalid value '" + value + "' for " + key);
  }
  return out;
}

template <typename T>
T parse_positive(const std::string& value, std::size_t line_no, const std::string& key) {
  const T v = parse_number<T>(value, line_no, key);
  if (!(v > 0)) fail(line_no, key + " must be positive");
  return v;
}

}  // namespace

ExperimentFile parse_experiment_text(const std::string& text) {
  ExperimentFile file;
  ExperimentConfig& c = file.config;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "missing key");
    if (value.empty()) fail(line_no, "missing value for " + key);
    if (!file.keys_seen.insert(key).second) fail(line_no, "duplicate key " + key);

    if (key == "algorithms") {
      c.algorithms = parse_list(value, line_no);
    } else if (key == "problems") {
      c.problems = parse_list(value, line_no);
    } else if (key == "runs") {
      c.runs = parse_positive<int>(value, line_no, key);
    } else if (key == "base_seed") {
      c.base_seed = parse_number<std::uint64_t>(value, line_no, key);
    } else if (key == "budget") {
      c.budget = parse_positive<std::uint64_t>(value, line_no, key);
    } else if (key == "np") {
      c.colony_size = parse_positive<int>(value, line_no, key);
    } else if (key == "limit") {
      c.limit = parse_positive<int>(value, line_no, key);
    } else if (key == "q") {
      c.memetic_epsilon = parse_positive<double>(value, line_no, key);
    } else if (key == "jobs") {
      c.jobs = parse_positive<unsigned>(value, line_no, key);
    } else if (key == "shift_seed") {
      c.problem_options.shift_seed = parse_number<std::uint64_t>(value, line_no, key);
    } else if (key == "output") {
      file.output = value;
    } else if (key == "format") {
      if (value != "csv" && value != "json") fail(line_no, "format must be csv or json");
      file.format = value;
    } else {
      fail(line_no, "unknown key " + key);
    }
  }
  for (const char* required : {"algorithms", "problems"}) {
    if (!file.keys_seen.contains(required)) {
      throw ConfigError(std::string("missing required key ") + required);
    }
  }
  return file;
}

ExperimentFile load_experiment_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_experiment_text(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace abcopt::cli

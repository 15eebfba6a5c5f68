#include "abcopt/results_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace abcopt {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_cell(const std::string& text, std::size_t line_no, const char* column) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ResultsIoError("line " + std::to_string(line_no) + ": bad " + column + " value '" + text +
                         "'");
  }
  return value;
}

json to_json(const RunRecord& r) {
  return {{"algorithm", r.algorithm},   {"problem", r.problem},
          {"seed", r.seed},             {"evaluations", r.evaluations},
          {"best_objective", r.best_objective}, {"error", r.error},
          {"success", r.success}};
}

json to_json(const Summary& s) {
  return {{"algorithm", s.algorithm}, {"problem", s.problem}, {"runs", s.runs},
          {"successes", s.successes}, {"SD", s.sd},           {"ME", s.me},
          {"AFE", s.afe},             {"SR", s.sr}};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResultsIoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string records_to_csv(std::span<const RunRecord> records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += r.algorithm + ',' + r.problem + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.evaluations) + ',' + format_number(r.best_objective) + ',' +
           format_number(r.error) + ',' + (r.success ? "1" : "0") + '\n';
  }
  return out;
}

std::vector<RunRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ResultsIoError("empty results file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = split(line, ',');
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) column[header[i]] = i;
  for (const char* required :
       {"algorithm", "problem", "seed", "evaluations", "best_objective", "error", "success"}) {
    if (!column.contains(required)) {
      throw ResultsIoError(std::string("missing column '") + required + "'");
    }
  }

  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw ResultsIoError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(header.size()) + " fields, got " +
                           std::to_string(cells.size()));
    }
    RunRecord r;
    r.algorithm = cells[column["algorithm"]];
    r.problem = cells[column["problem"]];
    r.seed = parse_cell<std::uint64_t>(cells[column["seed"]], line_no, "seed");
    r.evaluations = parse_cell<std::uint64_t>(cells[column["evaluations"]], line_no, "evaluations");
    r.best_objective = parse_cell<double>(cells[column["best_objective"]], line_no, "best_objective");
    r.error = parse_cell<double>(cells[column["error"]], line_no, "error");
    r.success = parse_cell<int>(cells[column["success"]], line_no, "success") != 0;
    records.push_back(std::move(r));
  }
  return records;
}

std::string results_to_json(std::span<const RunRecord> records, std::span<const Summary> summaries) {
  json doc;
  doc["records"] = json::array();
  for (const auto& r : records) doc["records"].push_back(to_json(r));
  doc["summaries"] = json::array();
  for (const auto& s : summaries) doc["summaries"].push_back(to_json(s));
  return doc.dump(2) + '\n';
}

void results_from_json(const std::string& text, std::vector<RunRecord>& records,
                       std::vector<Summary>& summaries) {
  records.clear();
  summaries.clear();
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("records")) {
      RunRecord r;
      r.algorithm = j.at("algorithm").get<std::string>();
      r.problem = j.at("problem").get<std::string>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.evaluations = j.at("evaluations").get<std::uint64_t>();
      r.best_objective = j.at("best_objective").get<double>();
      r.error = j.at("error").get<double>();
      r.success = j.at("success").get<bool>();
      records.push_back(std::move(r));
    }
    if (doc.contains("summaries")) {
      for (const auto& j : doc.at("summaries")) {
        Summary s;
        s.algorithm = j.at("algorithm").get<std::string>();
        s.problem = j.at("problem").get<std::string>();
        s.runs = j.at("runs").get<int>();
        s.successes = j.at("successes").get<int>();
        s.sd = j.at("SD").get<double>();
        s.me = j.at("ME").get<double>();
        s.afe = j.at("AFE").get<double>();
        s.sr = j.at("SR").get<int>();
        summaries.push_back(std::move(s));
      }
    }
  } catch (const json::exception& e) {
    throw ResultsIoError(std::string("malformed results JSON: ") + e.what());
  }
  if (summaries.empty() && !records.empty()) summaries = summarize_all(records);
}

void write_results(const std::filesystem::path& path, ResultFormat format,
                   std::span<const RunRecord> records, std::span<const Summary> summaries) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResultsIoError("cannot open '" + path.string() + "' for writing");
  out << (format == ResultFormat::csv ? records_to_csv(records) : results_to_json(records, summaries));
  out.flush();
  if (!out) throw ResultsIoError("failed writing '" + path.string() + "'");
}

void read_results(const std::filesystem::path& path, std::vector<RunRecord>& records,
                  std::vector<Summary>& summaries) {
  const std::string text = slurp(path);
  try {
    if (path.extension() == ".json") {
      results_from_json(text, records, summaries);
    } else {
      records = records_from_csv(text);
      summaries = summarize_all(records);
    }
  } catch (const ResultsIoError& e) {
    throw ResultsIoError(path.string() + ": " + e.what());
  }
}

}  // namespace abcopt

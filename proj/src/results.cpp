#include "cedom/results.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"

namespace cedom {

std::optional<long long> ResultRecord::gap() const {
  if (!feasible || !known) return std::nullopt;
  return static_cast<long long>(best_score) - static_cast<long long>(known->value);
}

double ResultRecord::mean_seconds() const {
  if (seconds.empty()) return 0.0;
  return std::accumulate(seconds.begin(), seconds.end(), 0.0) / static_cast<double>(seconds.size());
}

ResultRecord make_record(const Instance& instance, VariantKind variant, const CEParams& params,
                         std::span<const std::uint64_t> seeds, const MultiRunResult& runs) {
  ResultRecord r;
  r.instance = instance.name;
  r.variant = variant;
  r.params = params;
  r.seeds.assign(seeds.begin(), seeds.end());
  const RunResult& best = runs.best();
  r.best_score = best.best_score;
  for (Vertex v : best.best_set) r.best_set.push_back(instance.labels.at(v));
  for (const auto& run : runs.runs) {
    r.per_seed_scores.push_back(run.best_score);
    r.iterations.push_back(run.iterations);
    r.seconds.push_back(run.seconds);
  }
  return r;
}

ResultRecord infeasible_record(const Instance& instance, VariantKind variant, const CEParams& params,
                               std::span<const std::uint64_t> seeds) {
  ResultRecord r;
  r.instance = instance.name;
  r.variant = variant;
  r.params = params;
  r.seeds.assign(seeds.begin(), seeds.end());
  r.feasible = false;
  return r;
}

std::string format_seconds(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  return buf;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "instance", "variant",         "N",          "M",     "rho",         "alpha", "r",
      "seeds",    "best_score",      "best_set",   "per_seed_scores",      "iterations",
      "known",    "known_exact",     "gap",        "seconds", "mean_seconds"};
  return columns;
}

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& items, std::string_view sep, F&& format) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += format(items[i]);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& items, std::string_view sep) {
  return join(items, sep, [](const T& x) { return std::to_string(x); });
}

std::string quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double round_ms(double s) { return std::round(s * 1000.0) / 1000.0; }

}  // namespace

std::vector<std::string> csv_cells(const ResultRecord& r) {
  const auto gap = r.gap();
  return {r.instance,
          std::string(variant_name(r.variant)),
          std::to_string(r.params.samples),
          std::to_string(r.params.elite),
          format_double(r.params.rho),
          format_double(r.params.alpha),
          std::to_string(r.params.stagnation),
          join(r.seeds, ";"),
          r.feasible ? std::to_string(r.best_score) : "inf",
          join(r.best_set, " ", [](const std::string& s) { return s; }),
          join(r.per_seed_scores, ";"),
          join(r.iterations, ";"),
          r.known ? std::to_string(r.known->value) : "",
          r.known ? (r.known->exact ? "true" : "false") : "",
          gap ? std::to_string(*gap) : "",
          join(r.seconds, ";", format_seconds),
          r.feasible ? format_seconds(r.mean_seconds()) : ""};
}

std::string to_csv(std::span<const ResultRecord> records) {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += quote(cells[i]);
    }
    out += '\n';
  };
  emit(csv_columns());
  for (const auto& r : records) emit(csv_cells(r));
  return out;
}

std::string to_json(std::span<const ResultRecord> records) {
  using nlohmann::json;
  json out = json::array();
  for (const auto& r : records) {
    json j;
    j["instance"] = r.instance;
    j["variant"] = variant_name(r.variant);
    j["params"] = {{"N", r.params.samples},
                   {"M", r.params.elite},
                   {"rho", r.params.rho},
                   {"alpha", r.params.alpha},
                   {"r", r.params.stagnation}};
    j["seeds"] = r.seeds;
    j["feasible"] = r.feasible;
    j["best_score"] = r.feasible ? json(r.best_score) : json(nullptr);
    j["best_set"] = r.best_set;
    j["per_seed_scores"] = r.per_seed_scores;
    j["iterations"] = r.iterations;
    j["known"] = r.known ? json(r.known->value) : json(nullptr);
    j["known_exact"] = r.known ? json(r.known->exact) : json(nullptr);
    const auto gap = r.gap();
    j["gap"] = gap ? json(*gap) : json(nullptr);
    json secs = json::array();
    for (double s : r.seconds) secs.push_back(round_ms(s));
    j["seconds"] = secs;
    j["mean_seconds"] = r.feasible ? json(round_ms(r.mean_seconds())) : json(nullptr);
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      row.push_back(std::move(cell));
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (any || !cell.empty() || !row.empty()) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cedom

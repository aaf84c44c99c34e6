#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cedom/engine.hpp"
#include "cedom/results.hpp"

namespace cedom {

/// One suite line: `name source [variants=dom,total,...|all] [x=<number>]`.
/// The source is `file:<path>` (relative to the suite file) or a generator
/// spec understood by generate_instance. `x` positions the instance in the
/// plot series.
struct SuiteEntry {
  std::string name;
  std::string source;
  std::vector<VariantKind> variants;
  std::optional<double> x;
};

std::vector<SuiteEntry> parse_suite(std::string_view text);
std::vector<SuiteEntry> load_suite(const std::filesystem::path& path);

/// Instance name -> variant -> reference value. JSON object whose leaves are
/// either an integer (proven optimum) or {"value": v, "exact": false}.
using OptimaTable = std::map<std::string, std::map<VariantKind, KnownValue>>;

OptimaTable parse_optima(std::string_view json_text);
OptimaTable load_optima(const std::filesystem::path& path);

Instance load_suite_instance(const SuiteEntry& entry, const std::filesystem::path& base_dir);

struct BenchmarkOptions {
  CEParams params;
  std::vector<std::uint64_t> seeds;
  unsigned threads = 1;
  std::function<void(const ResultRecord&)> on_record;
};

/// Runs every (instance, variant) pair of the suite in suite order. Every
/// instance is loaded up front, so a missing file fails before any solving.
/// Infeasible pairs are recorded rather than raised.
std::vector<ResultRecord> run_benchmark(const std::vector<SuiteEntry>& suite,
                                        const std::filesystem::path& base_dir, const OptimaTable& optima,
                                        const BenchmarkOptions& options);

/// Plot-ready rows `variant,x,instance,ce_best,known,mean_seconds` for
/// entries with an x coordinate.
std::string series_csv(const std::vector<SuiteEntry>& suite, const std::vector<ResultRecord>& records);

/// Writes <prefix>.csv, <prefix>.json and, if any entry has x, <prefix>_series.csv.
void write_outputs(const std::filesystem::path& prefix, const std::vector<ResultRecord>& records,
                   const std::vector<SuiteEntry>& suite = {});

}  // namespace cedom

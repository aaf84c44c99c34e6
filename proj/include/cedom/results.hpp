#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cedom/engine.hpp"
#include "cedom/instance_io.hpp"
#include "cedom/variants.hpp"

namespace cedom {

/// A reference value for an (instance, variant) pair: a proven optimum, or
/// an upper bound when `exact` is false.
struct KnownValue {
  std::size_t value = 0;
  bool exact = true;

  friend bool operator==(const KnownValue&, const KnownValue&) = default;
};

/// Outcome of best-of-seeds solving for one (instance, variant) pair.
/// Infeasible pairs carry no scores and empty per-run lists.
struct ResultRecord {
  std::string instance;
  VariantKind variant = VariantKind::Domination;
  CEParams params;
  std::vector<std::uint64_t> seeds;
  bool feasible = true;
  std::size_t best_score = 0;
  std::vector<std::string> best_set;  // external labels
  std::vector<std::size_t> per_seed_scores;
  std::vector<std::size_t> iterations;
  std::vector<double> seconds;
  std::optional<KnownValue> known;

  /// best_score minus the known value.
  std::optional<long long> gap() const;
  double mean_seconds() const;
};

ResultRecord make_record(const Instance& instance, VariantKind variant, const CEParams& params,
                         std::span<const std::uint64_t> seeds, const MultiRunResult& runs);

ResultRecord infeasible_record(const Instance& instance, VariantKind variant, const CEParams& params,
                               std::span<const std::uint64_t> seeds);

/// Column names, timing columns last.
const std::vector<std::string>& csv_columns();
inline constexpr std::size_t kTimingColumns = 2;

/// The record's CSV cells in csv_columns() order, unquoted.
std::vector<std::string> csv_cells(const ResultRecord& record);

/// Header plus one RFC 4180 row per record.
std::string to_csv(std::span<const ResultRecord> records);

/// JSON array of records.
std::string to_json(std::span<const ResultRecord> records);

/// Splits CSV text into rows of unquoted cells.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

std::string format_seconds(double seconds);
std::string format_double(double x);

}  // namespace cedom

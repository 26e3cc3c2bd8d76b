#pragma once

#include "tomolab/estimators.hpp"
#include "tomolab/infotheory.hpp"
#include "tomolab/packing.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tomolab {

inline constexpr const char* kVersion = "0.1.0";

/// Flat key-value experiment configuration. Parsed from a plain text file of
/// `key = value` lines (lists comma-separated, `#` comments). Re-running an
/// identical config with the same seed reproduces identical reports.
class ExperimentConfig {
 public:
  ExperimentConfig() = default;

  static ExperimentConfig from_file(const std::filesystem::path& path);
  static ExperimentConfig from_stream(std::istream& is);

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key, const std::string& fallback) const;
  long get_int(const std::string& key, long fallback) const;
  double get_real(const std::string& key, double fallback) const;
  std::vector<long> get_int_list(const std::string& key, std::vector<long> fallback) const;
  std::vector<double> get_real_list(const std::string& key, std::vector<double> fallback) const;

  std::uint64_t seed() const { return static_cast<std::uint64_t>(get_int("seed", 0)); }

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

struct ReportRow {
  std::string claim;   // which check the row verifies
  std::string params;  // space-separated key=value cell coordinates
  double empirical = 0;
  double theory = 0;
  double se = 0;
  std::string verdict;  // "pass" | "fail" | "info"
};

struct ExperimentReport {
  std::string kind;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config_echo;
  std::vector<ReportRow> rows;
  double wall_seconds = 0;  // metadata only; never serialized into the CSV
  std::string version = kVersion;

  bool all_passed() const;
  int failures() const;

  /// Deterministic for a fixed config and seed (no timestamps).
  std::string csv() const;
  nlohmann::json to_json() const;
};

/// Writes report.json and <kind>.csv under out_dir (created if needed).
void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir);

/// Empirical risk (Frobenius-squared and trace-distance) of an estimator
/// against closed-form values, one row per (dimension, sample-count) cell.
ExperimentReport run_risk_curve(const ExperimentConfig& cfg);

/// Bisect the minimal sample count reaching trace-distance eps per dimension
/// and fit the log-log scaling slope.
ExperimentReport run_scaling_fit(const ExperimentConfig& cfg);

/// Every Monte-Carlo-vs-closed-form check: Haar moment oracles, perturbed and
/// rank-r measurement moments, the expected chi^2 cap, overlap concentration,
/// and the shadow variance cap.
ExperimentReport run_bound_suite(const ExperimentConfig& cfg);

/// Build a packing per config, re-verify it exhaustively, report rejection
/// statistics, and serialize the construction.
ExperimentReport run_packing_experiment(const ExperimentConfig& cfg);

/// End-to-end sample-mean shadow estimation at the planned sample count.
ExperimentReport run_shadow_experiment(const ExperimentConfig& cfg);

/// Build the shadow discrimination instance, verify its gap identities, and
/// measure identification accuracy against the sample count.
ExperimentReport run_shadow_discrimination(const ExperimentConfig& cfg);

/// Numeric lower-bound thresholds for the requested parameter grid, labeled
/// by regime.
ExperimentReport run_lower_bound_table(const ExperimentConfig& cfg);

/// Quick smoke checks across all modules (reduced sample counts).
ExperimentReport run_selftest(const ExperimentConfig& cfg);

/// Dispatch by kind: risk, scaling, bounds, packing, shadows, discriminate,
/// tables, selftest.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace tomolab

#pragma once

// Conjecture reports and batch suites.
//
// A report compares two exact distributions. Cases covered by a proof are
// gated: a mismatch there is PROVEN-MATCH-REQUIRED and makes the suite fail.
// Everything else is informational.

#include <optional>
#include <string>
#include <vector>

#include "cellini/json_io.hpp"
#include "cellini/weyl.hpp"

namespace cellini {

enum class Status { Match, Mismatch, ProvenMatchRequired };
std::string to_string(Status s);

enum class Experiment { Conjecture1, Conjecture2, ClassConsistency };
std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& s);

struct ExperimentSpec {
  std::string id;
  Experiment experiment = Experiment::Conjecture1;
  WeylType type = WeylType::A;
  int n = 0;
  int q = 0;
};

struct Report {
  ExperimentSpec spec;
  Status status = Status::Match;
  bool gated = false;
  Json left;   ///< group-side (polynomial or alcove) distribution
  Json right;  ///< x_q side
  Json diffs = Json::array();
  std::optional<std::string> error;  ///< invariant failure or guard, if any
  double wall_seconds = 0;

  /// Wall-clock is left out unless requested so that output is byte-stable.
  Json to_json(bool with_timing = false) const;
};

/// Whether the whole case is covered by a proof.
bool is_gated(const ExperimentSpec& spec);

Report verify_conjecture1(WeylType type, int n, int q);
Report verify_conjecture2(int n, int q);
Report verify_class_consistency(int n, int q);
Report run_experiment(const ExperimentSpec& spec);

struct SuiteConfig {
  int workers = 1;
  std::vector<ExperimentSpec> experiments;
};

/// {"workers": N, "experiments": [{"id", "experiment", "type", "n", "q"}]}.
/// Throws std::invalid_argument on malformed input.
SuiteConfig parse_suite_config(const Json& j);
SuiteConfig load_suite_config(const std::string& path);

struct SuiteResult {
  std::vector<Report> reports;  ///< ordered by experiment id

  /// 0 unless some report is PROVEN-MATCH-REQUIRED or carries an error.
  int exit_code() const;
  Json to_json(bool with_timing = false) const;
  /// One row per distribution entry: id,experiment,type,n,q,status,side,label,value.
  std::string to_csv() const;
  /// Fixed-width table of (experiment, type, n, q) -> status.
  std::string summary_table() const;
};

SuiteResult run_suite(const SuiteConfig& config);

}  // namespace cellini

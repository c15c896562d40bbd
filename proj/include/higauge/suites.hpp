#pragma once

#include <optional>

#include "higauge/generate.hpp"
#include "higauge/io.hpp"
#include "higauge/transgression.hpp"

namespace higauge {

enum class Mode { Exact, Numeric };

struct SuiteConfig {
  std::string fixture = "adjoint:sl2";
  int n = 1;
  int patch_dim = 5;
  GenCaps caps;
  int instances = 25;
  uint64_t seed = 42;
  Mode mode = Mode::Exact;
  double tolerance = 1e-9;
  std::vector<std::string> suites;  // empty means all
  int workers = 0;                  // 0: HIGAUGE_WORKERS env var, else hardware
  std::string dump_dir;             // failing-instance fixtures land here if set
  std::optional<uint64_t> only_index;

  void validate() const;
};

// Suite names in canonical order.
const std::vector<std::string>& all_suite_names();

struct InstanceFailure {
  uint64_t index = 0;
  uint64_t seed = 0;
  std::string detail;
  std::string dump_path;
};

struct SuiteResult {
  std::string name;
  bool skipped = false;
  int instances = 0;
  int passes = 0;
  int vacuous = 0;
  int errors = 0;  // capability errors surfaced per instance
  double max_numeric_residual = 0.0;
  double wall_ms = 0.0;
  std::vector<InstanceFailure> failures;

  int failure_count() const { return static_cast<int>(failures.size()); }
  bool ok() const { return skipped || failures.empty(); }
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<SuiteResult> suites;

  bool ok() const {
    for (const auto& s : suites)
      if (!s.ok()) return false;
    return true;
  }
};

VerificationReport run_suites(const SuiteConfig& cfg);

json verification_report_to_json(const VerificationReport& rep);
std::string verification_report_summary(const VerificationReport& rep);

}  // namespace higauge

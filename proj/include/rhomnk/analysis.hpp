#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rhomnk/stats.hpp"

namespace rhomnk {

struct AnalysisOptions {
  int workers = 0;
  int baseline_repeats = 30;
};

struct AnalysisResult {
  InstanceParams params;
  uint64_t n_solutions = 0;
  EfficientSet eff;
  SupportedSet sup;
  ConnectednessReport conn;
  std::optional<CorrelationReport> corr;  // absent for single-objective instances
};

/// enumerate -> efficient set -> supported set -> connectedness ->
/// objective correlations (m >= 2 only).
AnalysisResult analyze_instance(const Instance& inst, const AnalysisOptions& options = {});

/// Same pipeline on an already-enumerated table.
AnalysisResult analyze_table(const InstanceParams& params, const ObjectiveTable& table,
                             const AnalysisOptions& options = {});

/// One line per efficient solution: index, bit string (most significant bit
/// first), objective values, supported flag, witness weights (empty fields
/// when unsupported).
void write_efficient_csv(const AnalysisResult& result, const std::string& digest,
                         std::ostream& out);

/// Structured summary mirroring the CSV and connectedness numbers.
void write_report_json(const AnalysisResult& result, const std::string& digest,
                       std::ostream& out);

/// Canonical config string of an analysis run (digest input).
std::string analysis_config_string(const InstanceParams& params,
                                   const AnalysisOptions& options);

/// Canonical one-line parameter echo, used in file headers and captions.
std::string describe_params(const InstanceParams& params);

std::string solution_bits(Solution x, int n);

}  // namespace rhomnk

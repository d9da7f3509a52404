#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rhomnk/stats.hpp"

namespace rhomnk {

struct ExperimentConfig {
  GridSpec grid;
  int replicates = 30;
  uint64_t master_seed = 0;
  int workers = 0;
  int baseline_repeats = 30;
};

class ResumeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical config string; its FNV digest keys resumability. Worker count
/// is excluded: it never changes any output byte.
std::string experiment_config_string(const ExperimentConfig& config);
std::string experiment_config_digest(const ExperimentConfig& config);

std::string results_csv_header(const ExperimentConfig& config, const std::string& digest);
std::string format_result_row(const GridResultRow& row);

/// Runs the experiment into out_dir, writing results.csv (one row per
/// completed task, streamed in canonical order) and aggregate.csv. An
/// existing results.csv with the same config digest is resumed after its
/// last complete row; a different digest raises ResumeMismatchError.
void run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                    std::ostream& log);

/// Parses a results.csv written by run_experiment. Returns the data rows;
/// digest_out (optional) receives the header digest. Ignores a trailing
/// partial line.
std::vector<GridResultRow> read_results_csv(std::istream& in, std::string* digest_out);

void write_aggregate_csv(std::span<const AggregateRow> rows, const ExperimentConfig& config,
                         const std::string& digest, std::ostream& out);

}  // namespace rhomnk

#pragma once
// Monte Carlo harness. A sweep walks a grid of (n, multiplier) cells, where
// p = multiplier * conjectured_threshold(n, r, 0) clamped to [0, 1], runs
// seeded trials per cell and records diameter plus repair outcomes. Every
// trial seed is a pure function of (master_seed, n, multiplier index, trial
// index), so whole runs and single cells reproduce bit for bit.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

enum class ExperimentMode { Sweep, ExpectationCheck };
const char* to_string(ExperimentMode mode);

struct ExperimentConfig {
  std::vector<int> n_values;
  int r = 3;
  double epsilon = 0.0;  // recorded with the run; p positioning always uses 0
  std::vector<double> multipliers = {0.5, 0.7, 0.85, 1.0, 1.15, 1.3, 1.5};
  int trials = 100;
  std::uint64_t master_seed = 1;
  int k_threshold = 1;
  int pool_size = 50;  // default min(r * L, 50) with L at epsilon = 1
  ExperimentMode mode = ExperimentMode::Sweep;
  // Wall-clock trial timing is opt-in: recorded elapsed_ms stays 0 without
  // it, keeping records (and emitted CSV) a pure function of the config.
  bool timing = false;
};

int default_pool_size(int r);

// Flat key=value text, one pair per line, keys named exactly like the
// ExperimentConfig fields, lists comma-separated, '#' comments and blank
// lines ignored. Unknown keys are errors; missing keys keep the defaults
// above (pool_size defaults from r). n_values is required.
// Throws ConfigError.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

struct TrialRecord {
  int n = 0;
  int r = 0;
  double multiplier = 0;
  double p = 0;
  int trial_index = 0;
  std::uint64_t seed = 0;
  bool connected = false;
  std::optional<int> diameter;  // nullopt rendered as "inf"
  bool diam_le_r = false;
  std::string repair_status;
  int dangerous_count = 0;
  int recoloured_count = 0;
  bool verified_rainbow = false;  // final colouring machine-verified rainbow
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Per-trial base seed; sub-streams (graph bits, colour bits, pair picks) are
// derived from it with fixed salts.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, int n,
                                int multiplier_index, int trial_index);

// Records ordered by (n, multiplier, trial_index); deterministic given cfg.
// Per-trial errors are captured in repair_status as "Error: ...", never
// aborting the sweep. threads > 1 computes trials concurrently into their
// slots; output is identical to the serial run.
std::vector<TrialRecord> run_threshold_sweep(const ExperimentConfig& cfg,
                                             int threads = 1);

// The rows the full sweep would produce for one (n, multiplier) cell,
// keeping that cell's position in cfg for seed derivation.
std::vector<TrialRecord> run_single_cell(const ExperimentConfig& cfg,
                                         int n_index, int multiplier_index);

struct ExpectationSummary {
  int n = 0;
  double multiplier = 0;
  double p = 0;
  int trials = 0;
  double empirical_mean = 0;  // rainbow r-path count between a random pair
  double predicted = 0;       // expected_rainbow_r_path_count(n, r, p)
  double relative_error = 0;  // |empirical - predicted| / predicted
};

// One summary per (n, multiplier) cell: fresh graph and colouring per trial,
// one uniformly random vertex pair per trial, full enumeration (no limit
// truncation) of the rainbow r-paths joining it.
std::vector<ExpectationSummary> run_expectation_check(
    const ExperimentConfig& cfg);

// '#'-prefixed preamble echoing the config (plus a clamped flag recording
// whether any cell hit the p <= 1 clamp), a header row naming the
// TrialRecord fields in declared order, one CSV row per record. Byte
// deterministic given cfg and records.
void emit_csv(const ExperimentConfig& cfg,
              const std::vector<TrialRecord>& records, std::ostream& out);
void emit_csv_file(const ExperimentConfig& cfg,
                   const std::vector<TrialRecord>& records,
                   const std::string& path);

struct ParsedCsv {
  std::vector<std::string> preamble;  // raw '#' lines
  std::vector<TrialRecord> records;
};
// Parses emit_csv output back; round-trips records exactly.
ParsedCsv read_csv(std::istream& in);
ParsedCsv read_csv_file(const std::string& path);

// Row-level soundness checks (verified implies diameter <= r implies
// connected, Success implies verified, inf diameter never passes diam_le_r).
// Returns human-readable violations; empty means sound.
std::vector<std::string> validate_records(
    const std::vector<TrialRecord>& records);

}  // namespace rainbow

#include "rainbow/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "rainbow/gnp.hpp"
#include "rainbow/repair.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/thresholds.hpp"

namespace rainbow {

namespace {

// Fixed salts for the independent randomness consumers within one trial.
constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kColourStream = 2;
constexpr std::uint64_t kPairStream = 3;

constexpr const char* kCsvHeader =
    "n,r,multiplier,p,trial_index,seed,connected,diameter,diam_le_r,"
    "repair_status,dangerous_count,recoloured_count,verified_rainbow,"
    "elapsed_ms";

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Shortest round-trip form via to_chars: deterministic bytes, exact value.
std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

const char* format_bool(bool b) { return b ? "true" : "false"; }

double parse_double(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t.empty()) throw ConfigError(what + ": empty number");
  char* end = nullptr;
  const double x = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw ConfigError(what + ": bad number \"" + t + "\"");
  return x;
}

long long parse_int(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  long long x = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), x);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
    throw ConfigError(what + ": bad integer \"" + t + "\"");
  return x;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  std::uint64_t x = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), x);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
    throw ConfigError(what + ": bad unsigned integer \"" + t + "\"");
  return x;
}

bool parse_bool(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t == "true") return true;
  if (t == "false") return false;
  throw ConfigError(what + ": expected true or false, got \"" + t + "\"");
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.n_values.empty()) throw ConfigError("n_values: need at least one n");
  for (int n : cfg.n_values)
    if (n < 2) throw ConfigError("n_values: every n must be >= 2");
  if (cfg.r < 3) throw ConfigError("r: threshold positioning needs r >= 3");
  if (!(cfg.epsilon > -1.0)) throw ConfigError("epsilon: must exceed -1");
  if (cfg.multipliers.empty())
    throw ConfigError("multipliers: need at least one multiplier");
  for (double m : cfg.multipliers)
    if (!(m > 0.0)) throw ConfigError("multipliers: must be > 0");
  if (cfg.trials < 0) throw ConfigError("trials: must be >= 0");
  if (cfg.k_threshold < 0) throw ConfigError("k_threshold: must be >= 0");
  if (cfg.pool_size < 1) throw ConfigError("pool_size: must be >= 1");
}

struct CellParams {
  int n = 0;
  double multiplier = 0;
  double p = 0;
  bool clamped = false;
  int n_index = 0;
  int mult_index = 0;
};

CellParams cell_params(const ExperimentConfig& cfg, int n_index,
                       int mult_index) {
  CellParams cell;
  cell.n = cfg.n_values[static_cast<std::size_t>(n_index)];
  cell.multiplier = cfg.multipliers[static_cast<std::size_t>(mult_index)];
  cell.n_index = n_index;
  cell.mult_index = mult_index;
  cell.p = cell.multiplier * conjectured_threshold(cell.n, cfg.r, 0.0);
  if (cell.p > 1.0) {
    cell.p = 1.0;
    cell.clamped = true;
  }
  return cell;
}

bool any_cell_clamped(const ExperimentConfig& cfg) {
  for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni)
    for (std::size_t mi = 0; mi < cfg.multipliers.size(); ++mi)
      if (cell_params(cfg, static_cast<int>(ni), static_cast<int>(mi)).clamped)
        return true;
  return false;
}

std::string sanitize_cell(std::string s) {
  for (char& ch : s)
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  return s;
}

TrialRecord run_sweep_trial(const ExperimentConfig& cfg,
                            const CellParams& cell, int trial_index) {
  TrialRecord rec;
  rec.n = cell.n;
  rec.r = cfg.r;
  rec.multiplier = cell.multiplier;
  rec.p = cell.p;
  rec.trial_index = trial_index;
  rec.seed = derive_trial_seed(cfg.master_seed, cell.n, cell.mult_index,
                               trial_index);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g =
        gnp_generate(cell.n, cell.p, derive_seed(rec.seed, kGraphStream));
    rec.diameter = diameter(g);
    rec.connected = rec.diameter.has_value();
    rec.diam_le_r = rec.connected && *rec.diameter <= cfg.r;
    const RepairOutcome outcome =
        repair_colouring(g, derive_seed(rec.seed, kColourStream), cfg.r,
                         cfg.k_threshold, cfg.pool_size);
    rec.repair_status = to_string(outcome.status);
    rec.dangerous_count = static_cast<int>(outcome.report.pairs.size());
    rec.recoloured_count = static_cast<int>(outcome.repaired_paths.size());
    rec.verified_rainbow = outcome.verified;
  } catch (const std::exception& e) {
    rec.repair_status = sanitize_cell(std::string("Error: ") + e.what());
    rec.verified_rainbow = false;
  }
  if (cfg.timing)
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return rec;
}

}  // namespace

const char* to_string(ExperimentMode mode) {
  return mode == ExperimentMode::Sweep ? "Sweep" : "ExpectationCheck";
}

int default_pool_size(int r) {
  if (r < 3) return 50;
  const auto pc = proof_constants(r, 1.0);
  return static_cast<int>(std::min<std::int64_t>(pc.K, 50));
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  bool n_given = false;
  bool pool_given = false;
  bool r_given = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    if (key == "n_values") {
      cfg.n_values.clear();
      for (const auto& item : split(value, ','))
        cfg.n_values.push_back(static_cast<int>(parse_int(item, key)));
      n_given = true;
    } else if (key == "r") {
      cfg.r = static_cast<int>(parse_int(value, key));
      r_given = true;
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(value, key);
    } else if (key == "multipliers") {
      cfg.multipliers.clear();
      for (const auto& item : split(value, ','))
        cfg.multipliers.push_back(parse_double(item, key));
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_int(value, key));
    } else if (key == "master_seed") {
      cfg.master_seed = parse_u64(value, key);
    } else if (key == "k_threshold") {
      cfg.k_threshold = static_cast<int>(parse_int(value, key));
    } else if (key == "pool_size") {
      cfg.pool_size = static_cast<int>(parse_int(value, key));
      pool_given = true;
    } else if (key == "mode") {
      if (value == "Sweep")
        cfg.mode = ExperimentMode::Sweep;
      else if (value == "ExpectationCheck")
        cfg.mode = ExperimentMode::ExpectationCheck;
      else
        throw ConfigError("mode: expected Sweep or ExpectationCheck, got \"" +
                          value + "\"");
    } else if (key == "timing") {
      cfg.timing = parse_bool(value, key);
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key \"" +
                        key + "\"");
    }
  }
  if (!n_given) throw ConfigError("n_values is required");
  if (!pool_given && r_given) cfg.pool_size = default_pool_size(cfg.r);
  validate_config(cfg);
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  try {
    return parse_config(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, int n,
                                int multiplier_index, int trial_index) {
  std::uint64_t s = derive_seed(master_seed, static_cast<std::uint64_t>(n));
  s = derive_seed(s, static_cast<std::uint64_t>(multiplier_index));
  return derive_seed(s, static_cast<std::uint64_t>(trial_index));
}

std::vector<TrialRecord> run_threshold_sweep(const ExperimentConfig& cfg,
                                             int threads) {
  if (cfg.mode != ExperimentMode::Sweep)
    throw std::invalid_argument("run_threshold_sweep: config mode must be Sweep");
  validate_config(cfg);

  const std::size_t per_mult = static_cast<std::size_t>(cfg.trials);
  const std::size_t per_n = cfg.multipliers.size() * per_mult;
  const std::size_t total = cfg.n_values.size() * per_n;
  std::vector<TrialRecord> records(total);
  if (total == 0) return records;

  auto compute = [&](std::size_t row) {
    const int n_index = static_cast<int>(row / per_n);
    const std::size_t rem = row % per_n;
    const int mult_index = static_cast<int>(rem / per_mult);
    const int trial_index = static_cast<int>(rem % per_mult);
    records[row] = run_sweep_trial(cfg, cell_params(cfg, n_index, mult_index),
                                   trial_index);
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(threads, 1), total);
  if (workers <= 1) {
    for (std::size_t row = 0; row < total; ++row) compute(row);
  } else {
    // Each row lands in its own slot, so worker order cannot change output.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t row = next.fetch_add(1); row < total;
             row = next.fetch_add(1))
          compute(row);
      });
    for (auto& t : pool) t.join();
  }
  return records;
}

std::vector<TrialRecord> run_single_cell(const ExperimentConfig& cfg,
                                         int n_index, int multiplier_index) {
  validate_config(cfg);
  if (n_index < 0 || n_index >= static_cast<int>(cfg.n_values.size()))
    throw std::invalid_argument("run_single_cell: n_index out of range");
  if (multiplier_index < 0 ||
      multiplier_index >= static_cast<int>(cfg.multipliers.size()))
    throw std::invalid_argument("run_single_cell: multiplier_index out of range");
  const CellParams cell = cell_params(cfg, n_index, multiplier_index);
  std::vector<TrialRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.trials));
  for (int t = 0; t < cfg.trials; ++t)
    records.push_back(run_sweep_trial(cfg, cell, t));
  return records;
}

std::vector<ExpectationSummary> run_expectation_check(
    const ExperimentConfig& cfg) {
  if (cfg.mode != ExperimentMode::ExpectationCheck)
    throw std::invalid_argument(
        "run_expectation_check: config mode must be ExpectationCheck");
  validate_config(cfg);

  std::vector<ExpectationSummary> out;
  for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
    for (std::size_t mi = 0; mi < cfg.multipliers.size(); ++mi) {
      const CellParams cell =
          cell_params(cfg, static_cast<int>(ni), static_cast<int>(mi));
      double sum = 0.0;
      for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed =
            derive_trial_seed(cfg.master_seed, cell.n, cell.mult_index, t);
        const Graph g =
            gnp_generate(cell.n, cell.p, derive_seed(seed, kGraphStream));
        const EdgeColouring colouring =
            random_colouring(g, cfg.r, derive_seed(seed, kColourStream));
        SplitMix64 pick(derive_seed(seed, kPairStream));
        const auto u = static_cast<VertexId>(
            pick.next_below(static_cast<std::uint64_t>(cell.n)));
        auto v = static_cast<VertexId>(
            pick.next_below(static_cast<std::uint64_t>(cell.n - 1)));
        if (v >= u) ++v;
        const auto paths =
            enumerate_rainbow_r_paths(colouring, std::min(u, v), std::max(u, v),
                                      cfg.r, std::numeric_limits<int>::max());
        sum += static_cast<double>(paths.size());
      }
      ExpectationSummary s;
      s.n = cell.n;
      s.multiplier = cell.multiplier;
      s.p = cell.p;
      s.trials = cfg.trials;
      s.empirical_mean = cfg.trials > 0 ? sum / cfg.trials : 0.0;
      s.predicted = expected_rainbow_r_path_count(cell.n, cfg.r, cell.p);
      if (s.predicted > 0.0)
        s.relative_error = std::abs(s.empirical_mean - s.predicted) / s.predicted;
      else
        s.relative_error = s.empirical_mean == 0.0
                               ? 0.0
                               : std::numeric_limits<double>::infinity();
      out.push_back(s);
    }
  }
  return out;
}

namespace {

template <typename T>
std::string join_list(const std::vector<T>& items,
                      std::string (*fmt)(const T&)) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += fmt(items[i]);
  }
  return out;
}

}  // namespace

void emit_csv(const ExperimentConfig& cfg,
              const std::vector<TrialRecord>& records, std::ostream& out) {
  out << "# n_values="
      << join_list<int>(cfg.n_values,
                        [](const int& n) { return std::to_string(n); })
      << '\n';
  out << "# r=" << cfg.r << '\n';
  out << "# epsilon=" << format_double(cfg.epsilon) << '\n';
  out << "# multipliers="
      << join_list<double>(cfg.multipliers,
                           [](const double& m) { return format_double(m); })
      << '\n';
  out << "# trials=" << cfg.trials << '\n';
  out << "# master_seed=" << cfg.master_seed << '\n';
  out << "# k_threshold=" << cfg.k_threshold << '\n';
  out << "# pool_size=" << cfg.pool_size << '\n';
  out << "# mode=" << to_string(cfg.mode) << '\n';
  out << "# timing=" << format_bool(cfg.timing) << '\n';
  out << "# clamped=" << format_bool(any_cell_clamped(cfg)) << '\n';
  out << kCsvHeader << '\n';
  for (const TrialRecord& rec : records) {
    out << rec.n << ',' << rec.r << ',' << format_double(rec.multiplier) << ','
        << format_double(rec.p) << ',' << rec.trial_index << ',' << rec.seed
        << ',' << format_bool(rec.connected) << ',';
    if (rec.diameter)
      out << *rec.diameter;
    else
      out << "inf";
    out << ',' << format_bool(rec.diam_le_r) << ',' << rec.repair_status << ','
        << rec.dangerous_count << ',' << rec.recoloured_count << ','
        << format_bool(rec.verified_rainbow) << ',' << rec.elapsed_ms << '\n';
  }
}

void emit_csv_file(const ExperimentConfig& cfg,
                   const std::vector<TrialRecord>& records,
                   const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  emit_csv(cfg, records, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

ParsedCsv read_csv(std::istream& in) {
  ParsedCsv parsed;
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!header_seen) {
      if (!line.empty() && line[0] == '#') {
        parsed.preamble.push_back(line);
        continue;
      }
      if (line != kCsvHeader)
        throw std::runtime_error("csv line " + std::to_string(lineno) +
                                 ": expected the trial record header");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 14)
      throw std::runtime_error("csv line " + std::to_string(lineno) +
                               ": expected 14 cells, got " +
                               std::to_string(cells.size()));
    try {
      TrialRecord rec;
      rec.n = static_cast<int>(parse_int(cells[0], "n"));
      rec.r = static_cast<int>(parse_int(cells[1], "r"));
      rec.multiplier = parse_double(cells[2], "multiplier");
      rec.p = parse_double(cells[3], "p");
      rec.trial_index = static_cast<int>(parse_int(cells[4], "trial_index"));
      rec.seed = parse_u64(cells[5], "seed");
      rec.connected = parse_bool(cells[6], "connected");
      if (cells[7] == "inf")
        rec.diameter = std::nullopt;
      else
        rec.diameter = static_cast<int>(parse_int(cells[7], "diameter"));
      rec.diam_le_r = parse_bool(cells[8], "diam_le_r");
      rec.repair_status = cells[9];
      rec.dangerous_count =
          static_cast<int>(parse_int(cells[10], "dangerous_count"));
      rec.recoloured_count =
          static_cast<int>(parse_int(cells[11], "recoloured_count"));
      rec.verified_rainbow = parse_bool(cells[12], "verified_rainbow");
      rec.elapsed_ms = parse_int(cells[13], "elapsed_ms");
      parsed.records.push_back(std::move(rec));
    } catch (const ConfigError& e) {
      throw std::runtime_error("csv line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  if (!header_seen)
    throw std::runtime_error("csv input has no trial record header");
  return parsed;
}

ParsedCsv read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_csv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<std::string> validate_records(
    const std::vector<TrialRecord>& records) {
  std::vector<std::string> violations;
  auto flag = [&](std::size_t row, const std::string& what) {
    violations.push_back("row " + std::to_string(row) + ": " + what);
  };
  for (std::size_t i = 0; i < records.size(); ++i) {
    const TrialRecord& r = records[i];
    if (r.connected != r.diameter.has_value())
      flag(i, "connected must mean exactly a finite diameter");
    const bool expect_diam_le_r = r.diameter && *r.diameter <= r.r;
    if (r.diam_le_r != expect_diam_le_r)
      flag(i, "diam_le_r inconsistent with diameter and r");
    if (r.verified_rainbow && !r.diam_le_r)
      flag(i, "verified_rainbow requires diameter <= r");
    if (r.verified_rainbow && !r.connected)
      flag(i, "verified_rainbow requires a connected graph");
    if (r.repair_status == "Success" && !r.verified_rainbow)
      flag(i, "Success requires a verified rainbow colouring");
    if (!(r.p >= 0.0 && r.p <= 1.0)) flag(i, "p outside [0, 1]");
    if (!(r.multiplier > 0.0)) flag(i, "multiplier must be positive");
    if (r.trial_index < 0) flag(i, "negative trial_index");
    if (r.dangerous_count < 0 || r.recoloured_count < 0)
      flag(i, "negative counters");
    if (r.recoloured_count > r.dangerous_count)
      flag(i, "more recoloured paths than dangerous pairs");
  }
  return violations;
}

}  // namespace rainbow

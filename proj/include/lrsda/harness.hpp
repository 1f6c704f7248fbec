#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrsda/coarray.hpp"
#include "lrsda/doa.hpp"
#include "lrsda/geometry.hpp"
#include "lrsda/reconstruction.hpp"
#include "lrsda/signalsim.hpp"

namespace lrsda::harness {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kDefaultTrials = 50;

/// One closed-form claim checked against a reference value. The reference
/// is either the printed table entry or the enumerated co-array.
struct DiscrepancyRecord {
  std::string category;      // "table", "enumeration", "theorem2"
  std::string claim_source;  // e.g. "table-ii:TNA-II", "theorem1", "footnote-f"
  std::string array_spec;
  std::int64_t claimed = 0;
  std::int64_t observed = 0;
  std::string observed_kind;  // "printed" or "enumerated"
  bool best_effort = false;
  std::string note;

  bool mismatch() const { return claimed != observed; }
  std::string verdict() const { return mismatch() ? "mismatch" : "match"; }
};

std::string describe(const LrSdaParams& p);

// ---- geometry --------------------------------------------------------------

/// Closed-form split candidate with the largest enumerated U (delta searched).
LrSdaParams best_lr_sda(int n);

struct SplitOptimum {
  LrSdaParams params;
  Lag u = 0;
};

/// Exhaustive over (n1, n2, eta, delta) with n1 + n2 = n; ties keep the first
/// found in order n2 ascending, eta ascending, delta descending.
SplitOptimum exhaustive_best(int n);

struct GeometryReport {
  SensorArray array;
  std::optional<LrSdaParams> params;
  SoEca soeca;
  Redundancy rw;
  std::vector<std::pair<DofFormula, std::int64_t>> claimed;
  std::vector<DiscrepancyRecord> discrepancies;
};

GeometryReport geometry_report(const SensorArray& s, std::optional<LrSdaParams> params);

/// Hole-free claim for one LR-SDA instance: claimed hole-free DOF vs the
/// enumerated consecutive segment, noting the first missing lag.
DiscrepancyRecord hole_free_record(const LrSdaParams& p);

// ---- DOF table -------------------------------------------------------------

struct DofRow {
  std::string array;
  std::string sizing;
  int n = 0;
  std::int64_t printed = 0;
  std::int64_t formula = 0;
  bool best_effort = false;
  std::optional<LrSdaParams> params;       // LR-SDA rows
  std::optional<std::int64_t> enumerated;  // LR-SDA rows, delta searched
};

struct DofTable {
  std::vector<DofRow> rows;
  std::vector<DiscrepancyRecord> discrepancies;
};

DofTable dof_table();

// ---- redundancy ------------------------------------------------------------

struct RedundancyRow {
  int n = 0;
  LrSdaParams params;  // closed-form split, delta searched
  Lag u = 0;
  Redundancy rw;
  double lower_bound = 0.0;
  bool above_lower_bound = false;
  bool in_corollary_band = false;  // 1 <= R_w <= 2
  std::optional<SplitOptimum> best;  // exhaustive split, when requested
  Redundancy best_rw;
};

std::vector<RedundancyRow> redundancy_sweep(int n_lo, int n_hi, bool exhaustive);

/// Closed-form candidates vs exhaustive optimum for every n in [n_lo, n_hi].
std::vector<DiscrepancyRecord> theorem2_crosscheck(int n_lo, int n_hi);

// ---- Monte-Carlo DOA -------------------------------------------------------

struct TrialResult {
  std::optional<std::vector<double>> estimates;
  std::size_t peaks_found = 0;
};

/// Runs `trials` independent trials of `scenario` (its seed is the master
/// seed; trial t uses derive_seed(master, t)). Trials run in parallel and
/// results are stored by trial index, so output does not depend on the
/// worker count. With `oracle_estimates` the estimator is bypassed and the
/// truth returned (test hook).
std::vector<TrialResult> run_trials(const SensorArray& s, const Scenario& scenario, int trials,
                                    double grid_step_deg, bool oracle_estimates = false);

/// Serial reference for run_trials.
std::vector<TrialResult> run_trials_serial(const SensorArray& s, const Scenario& scenario,
                                           int trials, double grid_step_deg);

enum class SweepAxis { kSnr, kSnapshots, kSources };

SweepAxis sweep_axis_from_string(const std::string& name);
std::string to_string(SweepAxis a);

struct RmseSweepConfig {
  SensorArray array;
  SweepAxis axis = SweepAxis::kSnr;
  std::vector<double> values;
  int sources = 12;
  double snr_db = 0.0;
  long snapshots = 12000;
  int trials = kDefaultTrials;
  std::uint64_t seed = 1;
  double grid_step_deg = kDefaultGridStepDeg;
  double angle_lo_deg = -60.0;
  double angle_hi_deg = 60.0;
  bool oracle_estimates = false;
};

struct RmseSweepPoint {
  double value = 0.0;
  RmseResult result;
};

std::vector<RmseSweepPoint> rmse_sweep(const RmseSweepConfig& cfg);

// ---- output ----------------------------------------------------------------

/// "# key=value" metadata lines for CSV output.
std::string metadata_lines(const std::string& command, std::uint64_t seed, int trials,
                           double grid_step_deg);

std::string discrepancies_csv(const std::vector<DiscrepancyRecord>& records);

std::string geometry_csv(const GeometryReport& g);
std::string geometry_json(const GeometryReport& g);
std::string coarray_csv(const GeometryReport& g);
std::string coarray_json(const GeometryReport& g);
std::string dof_table_csv(const DofTable& t);
std::string dof_table_json(const DofTable& t);
std::string redundancy_csv(const std::vector<RedundancyRow>& rows);
std::string redundancy_json(const std::vector<RedundancyRow>& rows);
std::string doa_csv(const SensorArray& s, const Scenario& sc, const DoaOutcome& out,
                    double grid_step_deg);
std::string doa_json(const SensorArray& s, const Scenario& sc, const DoaOutcome& out,
                     double grid_step_deg);
std::string rmse_csv(const RmseSweepConfig& cfg, const std::vector<RmseSweepPoint>& pts);
std::string rmse_json(const RmseSweepConfig& cfg, const std::vector<RmseSweepPoint>& pts);
std::string reconstruction_csv(const SensorArray& s, const ReconstructionReport& r);
std::string reconstruction_json(const SensorArray& s, const ReconstructionReport& r);

}  // namespace lrsda::harness

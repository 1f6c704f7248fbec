#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrsda/error.hpp"
#include "lrsda/harness.hpp"

namespace {

using namespace lrsda;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mirrors the JSON config file; every field can be overridden on the command line.
struct ExperimentConfig {
  std::string kind;

  std::string array = "lr-sda";
  std::optional<int> n, n1, n2, eta, delta;
  std::string positions;

  std::optional<int> sources;
  std::vector<double> angles_deg;
  std::optional<double> snr_db;
  std::optional<long> snapshots;

  std::string axis = "snr";
  std::vector<double> values;

  int n_min = 2;
  int n_max = 60;
  bool exhaustive = false;

  int trials = harness::kDefaultTrials;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  double grid_step = kDefaultGridStepDeg;
  bool oracle_estimates = false;
};

template <typename T>
void take(const json& j, const char* key, T& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

template <typename T>
void take(const json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw UsageError("config: '" + where + "' must be an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw UsageError("config: unknown key '" + k + "' in " + where);
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config: " + std::string(e.what()));
  }
  ExperimentConfig c;
  try {
    check_keys(j, {"kind", "array", "scenario", "sweep", "range", "trials", "seed", "out", "format",
                   "grid_step"},
               "top level");
    take(j, "kind", c.kind);
    if (j.contains("array")) {
      const json& a = j["array"];
      check_keys(a, {"kind", "n", "n1", "n2", "eta", "delta", "positions"}, "array");
      take(a, "kind", c.array);
      take(a, "n", c.n);
      take(a, "n1", c.n1);
      take(a, "n2", c.n2);
      take(a, "eta", c.eta);
      take(a, "delta", c.delta);
      if (a.contains("positions")) {
        std::string csv;
        for (const auto& p : a["positions"]) csv += (csv.empty() ? "" : ",") + std::to_string(p.get<long>());
        c.positions = csv;
      }
    }
    if (j.contains("scenario")) {
      const json& s = j["scenario"];
      check_keys(s, {"sources", "angles_deg", "snr_db", "snapshots"}, "scenario");
      take(s, "sources", c.sources);
      take(s, "angles_deg", c.angles_deg);
      take(s, "snr_db", c.snr_db);
      take(s, "snapshots", c.snapshots);
    }
    if (j.contains("sweep")) {
      const json& s = j["sweep"];
      check_keys(s, {"axis", "values"}, "sweep");
      take(s, "axis", c.axis);
      take(s, "values", c.values);
    }
    if (j.contains("range")) {
      const json& r = j["range"];
      check_keys(r, {"n_min", "n_max", "exhaustive"}, "range");
      take(r, "n_min", c.n_min);
      take(r, "n_max", c.n_max);
      take(r, "exhaustive", c.exhaustive);
    }
    take(j, "trials", c.trials);
    take(j, "seed", c.seed);
    take(j, "out", c.out);
    take(j, "format", c.format);
    take(j, "grid_step", c.grid_step);
  } catch (const json::exception& e) {
    throw UsageError("config: " + std::string(e.what()));
  }
  return c;
}

std::optional<std::string> find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return std::nullopt;
}

struct ResolvedArray {
  SensorArray array;
  std::optional<LrSdaParams> params;
};

ResolvedArray resolve_array(const ExperimentConfig& c, std::optional<int> default_n) {
  if (c.array == "custom") {
    if (c.positions.empty()) throw UsageError("--array custom needs --positions");
    return {parse_positions(c.positions), std::nullopt};
  }
  if (c.array != "lr-sda") throw UsageError("--array must be lr-sda or custom");
  if (!c.positions.empty()) throw UsageError("--positions only applies to --array custom");
  LrSdaParams p;
  if (c.n) {
    if (c.n1 || c.n2) throw UsageError("give either --n or --n1/--n2, not both");
    p = harness::best_lr_sda(*c.n);
    if (c.eta || c.delta) throw UsageError("--eta/--delta need an explicit --n1/--n2 split");
  } else if (c.n1 || c.n2) {
    if (!c.n1 || !c.n2) throw UsageError("--n1 and --n2 go together");
    p.n1 = *c.n1;
    p.n2 = *c.n2;
    p.eta = c.eta ? *c.eta : default_eta(p.n2);
    if (c.delta) {
      p.delta = *c.delta;
    } else {
      validate(LrSdaParams{p.n1, p.n2, p.eta, 0});
      p = with_best_delta(p);
    }
  } else if (default_n) {
    p = harness::best_lr_sda(*default_n);
  } else {
    throw UsageError("lr-sda needs --n or --n1/--n2");
  }
  return {build_lr_sda(p), p};
}

std::vector<double> default_values(harness::SweepAxis a) {
  std::vector<double> v;
  switch (a) {
    case harness::SweepAxis::kSnr:
      for (int x = -10; x <= 10; x += 2) v.push_back(x);
      break;
    case harness::SweepAxis::kSnapshots:
      for (int x = 8000; x <= 18000; x += 2000) v.push_back(x);
      break;
    case harness::SweepAxis::kSources:
      for (int x = 4; x <= 20; x += 2) v.push_back(x);
      break;
  }
  return v;
}

void emit(const ExperimentConfig& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

bool json_out(const ExperimentConfig& c) { return c.format == "json"; }

int run(const std::string& kind, const ExperimentConfig& c) {
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  if (c.trials < 1) throw UsageError("--trials must be >= 1");
  if (!(c.grid_step > 0.0) || c.grid_step > 10.0) throw UsageError("--grid-step must be in (0, 10]");

  if (kind == "geometry" || kind == "coarray") {
    const ResolvedArray r = resolve_array(c, std::nullopt);
    const auto g = harness::geometry_report(r.array, r.params);
    if (kind == "geometry")
      emit(c, json_out(c) ? harness::geometry_json(g) : harness::geometry_csv(g));
    else
      emit(c, json_out(c) ? harness::coarray_json(g) : harness::coarray_csv(g));
    return kExitOk;
  }
  if (kind == "dof-table") {
    const auto t = harness::dof_table();
    emit(c, json_out(c) ? harness::dof_table_json(t) : harness::dof_table_csv(t));
    return kExitOk;
  }
  if (kind == "redundancy-sweep") {
    const auto rows = harness::redundancy_sweep(c.n_min, c.n_max, c.exhaustive);
    emit(c, json_out(c) ? harness::redundancy_json(rows) : harness::redundancy_csv(rows));
    return kExitOk;
  }
  if (kind == "reconstruction") {
    const ResolvedArray r = resolve_array(c, std::nullopt);
    const auto rep = r.params ? lr_sda_reconstruction(*r.params) : check_reconstruction(r.array);
    emit(c, json_out(c) ? harness::reconstruction_json(r.array, rep)
                        : harness::reconstruction_csv(r.array, rep));
    return kExitOk;
  }
  if (kind == "doa-sim") {
    const ResolvedArray r = resolve_array(c, 11);
    Scenario sc;
    sc.seed = c.seed;
    sc.snr_db = c.snr_db.value_or(0.0);
    sc.snapshots = c.snapshots.value_or(10000);
    if (!c.angles_deg.empty()) {
      if (c.sources && *c.sources != static_cast<int>(c.angles_deg.size()))
        throw UsageError("--sources disagrees with the number of --angles");
      sc.angles_deg = c.angles_deg;
    } else {
      sc.angles_deg = uniform_angles(c.sources.value_or(20));
    }
    sc.validate();
    const SnapshotMatrix x = simulate(r.array, sc);
    const DoaOutcome out =
        estimate_doa(r.array, estimate_soc(x), static_cast<int>(sc.angles_deg.size()), c.grid_step);
    emit(c, json_out(c) ? harness::doa_json(r.array, sc, out, c.grid_step)
                        : harness::doa_csv(r.array, sc, out, c.grid_step));
    return kExitOk;
  }
  if (kind == "rmse-sweep") {
    const ResolvedArray r = resolve_array(c, 11);
    harness::RmseSweepConfig cfg;
    cfg.array = r.array;
    cfg.axis = harness::sweep_axis_from_string(c.axis);
    cfg.values = c.values.empty() ? default_values(cfg.axis) : c.values;
    cfg.sources = c.sources.value_or(12);
    cfg.snr_db = c.snr_db.value_or(0.0);
    cfg.snapshots = c.snapshots.value_or(12000);
    cfg.trials = c.trials;
    cfg.seed = c.seed;
    cfg.grid_step_deg = c.grid_step;
    cfg.oracle_estimates = c.oracle_estimates;
    const auto pts = harness::rmse_sweep(cfg);
    emit(c, json_out(c) ? harness::rmse_json(cfg, pts) : harness::rmse_csv(cfg, pts));
    return kExitOk;
  }
  throw UsageError("unknown experiment kind '" + kind + "'");
}

void add_common(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--seed", c.seed, "master seed");
  sub->add_option("--out", c.out, "output path (stdout when omitted)");
  sub->add_option("--format", c.format, "csv or json");
  sub->add_option("--trials", c.trials, "Monte-Carlo trials");
  sub->add_option("--grid-step", c.grid_step, "MUSIC grid step in degrees");
}

void add_array(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--array", c.array, "lr-sda or custom");
  sub->add_option("--n", c.n, "total sensors (best closed-form split, delta by search)");
  sub->add_option("--n1", c.n1, "sensors in the first sub-array");
  sub->add_option("--n2", c.n2, "sensors in the second and third sub-arrays");
  sub->add_option("--eta", c.eta, "third sub-array size (default ceil(n2/2)-1)");
  sub->add_option("--delta", c.delta, "offset (default: searched for the largest U)");
  sub->add_option("--positions", c.positions, "custom positions in units of d, e.g. 0,1,5,8");
}

void add_scenario(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--sources", c.sources, "number of sources, uniform over [-60, 60] deg");
  sub->add_option("--angles", c.angles_deg, "explicit source angles in degrees")->delimiter(',');
  sub->add_option("--snr", c.snr_db, "per-source SNR in dB");
  sub->add_option("--snapshots", c.snapshots, "snapshots per trial");
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  try {
    if (auto path = find_config_path(argc, argv)) cfg = load_config(*path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"LR-SDA construction, co-array verification and DOA experiments"};
  app.set_version_flag("--version", std::string(harness::kVersion));
  std::string config_path;
  app.add_option("--config", config_path, "JSON experiment config; flags override its values");
  app.require_subcommand(0, 1);

  auto* geo = app.add_subcommand("geometry", "sensor positions, sub-arrays and DOF claims");
  auto* co = app.add_subcommand("coarray", "SO-ECA lags, weights and holes");
  auto* dof = app.add_subcommand("dof-table", "DOF comparison table with discrepancy records");
  auto* red = app.add_subcommand("redundancy-sweep", "redundancy of the best LR-SDA over a range of N");
  auto* doa = app.add_subcommand("doa-sim", "one seeded DOA trial; emits the MUSIC spectrum");
  auto* rms = app.add_subcommand("rmse-sweep", "Monte-Carlo RMSE over an SNR, snapshot or source sweep");
  auto* rec = app.add_subcommand("reconstruction", "sensor-position reconstruction condition");

  for (auto* sub : {geo, co, dof, red, doa, rms, rec}) {
    add_common(sub, cfg);
    sub->add_option("--config", config_path, "JSON experiment config");
  }
  for (auto* sub : {geo, co, doa, rms, rec}) add_array(sub, cfg);
  for (auto* sub : {doa, rms}) add_scenario(sub, cfg);
  red->add_option("--n-min", cfg.n_min, "smallest N");
  red->add_option("--n-max", cfg.n_max, "largest N");
  red->add_flag("--exhaustive", cfg.exhaustive, "also report the exhaustive best split");
  rms->add_option("--axis", cfg.axis, "snr, snapshots or sources");
  rms->add_option("--values", cfg.values, "sweep values, comma separated")->delimiter(',');
  rms->add_flag("--oracle-estimates", cfg.oracle_estimates)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string kind = cfg.kind;
  if (!app.get_subcommands().empty()) kind = app.get_subcommands().front()->get_name();
  if (kind.empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    return run(kind, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

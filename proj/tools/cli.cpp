#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeitlin/harness.hpp"
#include "zeitlin/io.hpp"
#include "zeitlin/parallel.hpp"
#include "zeitlin/sun_matrix.hpp"

namespace zeitlin::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSubcommands = {"simulate",        "compare-stability",
                                               "converge",        "structure-report",
                                               "residual-report", "casimirs"};

json default_config() {
  return json::parse(R"({
  "run": {
    "scheme": "sine",
    "N": 25,
    "dt": 0.001,
    "t_end": 10.0,
    "record_every": 10,
    "symmetry_tolerance": 1e-06,
    "casimir_pmax": 5,
    "stop_on_symmetry_break": true
  },
  "initial_condition": {
    "kind": "delta",
    "x0": [0, 0],
    "amplitude": 1.0,
    "sigma": 3.0,
    "seed": 0,
    "support_radius": -1,
    "modes": []
  },
  "output": {
    "tracked_pairs": []
  },
  "converge": {
    "sigma": 3.0,
    "N_values": [9, 13, 17, 25],
    "N_reference": 31,
    "t_end": 1.0,
    "dt": 0.001,
    "record_every": 10,
    "support_radius": 2
  },
  "structure_report": {
    "pairs": [[[1, 0], [0, 1]], [[1, 1], [1, -1]], [[1, 0], [1, 3]], [[2, 1], [1, 2]], [[1, 0], [2, 0]]],
    "N_values": [15, 45, 135]
  },
  "residual_report": {
    "sigma": 3.0,
    "N_values": [15, 19, 23, 27, 31],
    "field_N": 0
  },
  "casimirs": {
    "snapshot": "",
    "pmax": 5
  }
})");
}

std::string type_name(const json& v) {
  if (v.is_number_integer()) return "integer";
  if (v.is_number()) return "number";
  return v.type_name();
}

bool compatible(const json& expected, const json& given) {
  if (expected.is_number_integer()) return given.is_number_integer();
  if (expected.is_number()) return given.is_number();
  return expected.type() == given.type();
}

// Overlay `src` onto `target`; every key in `src` must already exist there.
void merge_strict(json& target, const json& src, const std::string& prefix) {
  if (!src.is_object()) throw ConfigError("config section '" + prefix + "' must be an object");
  for (const auto& [key, value] : src.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!target.contains(key)) throw ConfigError("unknown config key '" + path + "'");
    json& slot = target[key];
    if (slot.is_object()) {
      merge_strict(slot, value, path);
    } else if (!compatible(slot, value)) {
      throw ConfigError("config key '" + path + "' expects " + type_name(slot) + ", got " +
                        type_name(value));
    } else {
      slot = value;
    }
  }
}

void apply_override(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;  // bare strings such as scheme=galerkin

  json patch = value;
  std::string rest = key;
  std::vector<std::string> parts;
  for (std::size_t pos; (pos = rest.find('.')) != std::string::npos; rest = rest.substr(pos + 1))
    parts.push_back(rest.substr(0, pos));
  parts.push_back(rest);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) patch = json{{*it, patch}};
  merge_strict(config, patch, "");
}

template <typename F>
auto read_value(const json& config, const std::string& path, F&& convert) {
  const json* node = &config;
  std::string rest = path;
  for (std::size_t pos; (pos = rest.find('.')) != std::string::npos; rest = rest.substr(pos + 1))
    node = &node->at(rest.substr(0, pos));
  try {
    return convert(node->at(rest));
  } catch (const json::exception& e) {
    throw ConfigError("bad value for config key '" + path + "': " + e.what());
  }
}

int read_int(const json& c, const std::string& path) {
  return read_value(c, path, [](const json& v) { return v.get<int>(); });
}
double read_double(const json& c, const std::string& path) {
  return read_value(c, path, [](const json& v) { return v.get<double>(); });
}

Wavevector to_wavevector(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw json::type_error::create(302, "wavevector must be [k1, k2] with integer entries", &v);
  return {v[0].get<int>(), v[1].get<int>()};
}

std::vector<int> read_int_list(const json& c, const std::string& path) {
  return read_value(c, path, [](const json& v) {
    std::vector<int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer())
        throw json::type_error::create(302, "list entries must be integers", &e);
      out.push_back(e.get<int>());
    }
    return out;
  });
}

std::uint64_t read_seed(const json& c) {
  const json& v = c.at("initial_condition").at("seed");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0 && !v.is_number_unsigned())
    throw ConfigError("config key 'initial_condition.seed' must be non-negative");
  return v.get<std::uint64_t>();
}

InitialConditionSpec initial_spec_from(const json& c) {
  InitialConditionSpec spec;
  const std::string kind =
      read_value(c, "initial_condition.kind", [](const json& v) { return v.get<std::string>(); });
  if (kind == "delta") {
    spec.kind = InitialConditionSpec::Kind::Delta;
  } else if (kind == "smooth") {
    spec.kind = InitialConditionSpec::Kind::Smooth;
  } else if (kind == "explicit") {
    spec.kind = InitialConditionSpec::Kind::Explicit;
  } else {
    throw ConfigError("initial_condition.kind must be delta, smooth or explicit, got '" + kind +
                      "'");
  }
  const Wavevector x0 = read_value(c, "initial_condition.x0", to_wavevector);
  spec.x0 = {x0.m1, x0.m2};
  spec.amplitude = read_double(c, "initial_condition.amplitude");
  spec.sigma = read_double(c, "initial_condition.sigma");
  spec.seed = read_seed(c);
  spec.support_radius = read_int(c, "initial_condition.support_radius");
  spec.modes = read_value(c, "initial_condition.modes", [](const json& v) {
    std::vector<std::pair<Wavevector, Complex>> modes;
    for (const auto& e : v) {
      if (!e.is_array() || e.size() != 4)
        throw json::type_error::create(302, "modes entries must be [k1, k2, re, im]", &e);
      modes.push_back({to_wavevector(json::array({e[0], e[1]})),
                       Complex{e[2].get<double>(), e[3].get<double>()}});
    }
    return modes;
  });
  return spec;
}

// (h, 0), (h - 2, -2) and (h - 2, 0): at N = 11 these are the pairs
// (5, 0), (3, -2), (3, 0) drawn in the mode-pair figures.
std::vector<Wavevector> default_tracked_modes(const ModeLattice& lattice) {
  const int h = lattice.half_width();
  std::vector<Wavevector> out;
  for (const Wavevector k : {Wavevector{h, 0}, Wavevector{h - 2, -2}, Wavevector{h - 2, 0}}) {
    if (k.is_zero() || !lattice.contains(k)) continue;
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  return out;
}

RunConfig run_config_from(const json& c) {
  RunConfig rc;
  const std::string scheme =
      read_value(c, "run.scheme", [](const json& v) { return v.get<std::string>(); });
  try {
    rc.scheme = parse_scheme(scheme);
  } catch (const std::invalid_argument&) {
    throw ConfigError("run.scheme must be galerkin or sine, got '" + scheme + "'");
  }
  rc.n_modes = read_int(c, "run.N");
  rc.dt = read_double(c, "run.dt");
  rc.t_end = read_double(c, "run.t_end");
  rc.record_every = read_int(c, "run.record_every");
  rc.symmetry_tolerance = read_double(c, "run.symmetry_tolerance");
  rc.casimir_pmax = read_int(c, "run.casimir_pmax");
  rc.stop_on_symmetry_break =
      read_value(c, "run.stop_on_symmetry_break", [](const json& v) { return v.get<bool>(); });
  rc.initial_condition = initial_spec_from(c);
  rc.tracked_modes = read_value(c, "output.tracked_pairs", [](const json& v) {
    std::vector<Wavevector> out;
    for (const auto& e : v) out.push_back(to_wavevector(e));
    return out;
  });
  if (rc.n_modes >= 3 && rc.n_modes % 2 == 1 && rc.tracked_modes.empty())
    rc.tracked_modes = default_tracked_modes(ModeLattice(rc.n_modes));
  try {
    validate(rc);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return rc;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y%m%dT%H%M%SZ");
  return os.str();
}

struct OutputTarget {
  fs::path root;
  std::string run_id;

  fs::path make(const std::string& subcommand, int n_modes, const std::string& scheme) const {
    const fs::path dir = root / (subcommand + "_" + std::to_string(n_modes) + "_" + scheme + "_" +
                                 (run_id.empty() ? utc_timestamp() : run_id));
    fs::create_directories(dir);
    return dir;
  }
};

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  writer(os);
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

void write_json_file(const fs::path& path, const json& j) {
  write_file(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string("none"); }

// ---------------------------------------------------------------------------

int cmd_simulate(const json& config, const OutputTarget& target, std::ostream& out) {
  RunConfig rc = run_config_from(config);
  rc.keep_snapshots = true;
  const auto start = std::chrono::steady_clock::now();
  const Trajectory traj = integrate(rc);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const fs::path dir = target.make("simulate", rc.n_modes, std::string(to_string(rc.scheme)));
  write_json_file(dir / "effective_config.json", config);
  write_file(dir / "diagnostics.csv", [&](std::ostream& os) { write_diagnostics_csv(os, traj); });
  write_file(dir / "modes.csv", [&](std::ostream& os) { write_mode_pairs_csv(os, traj); });
  write_file(dir / "snapshot_final.json", [&](std::ostream& os) {
    write_snapshot(os, traj.snapshots.back(), traj.records.back().t);
  });
  write_json_file(dir / "timing.json", json{{"elapsed_seconds", elapsed}});

  const auto t_break = detect_symmetry_breaking(traj, rc.symmetry_tolerance);
  const DiagnosticsRecord& first = traj.records.front();
  const DiagnosticsRecord& last = traj.records.back();
  out << "simulate N=" << rc.n_modes << " scheme=" << to_string(rc.scheme)
      << " t=" << fmt(last.t) << " records=" << traj.records.size()
      << " enstrophy=" << fmt(last.enstrophy) << " (initial " << fmt(first.enstrophy) << ")"
      << " t_break=" << fmt(t_break);
  if (traj.diverged_at) out << " DIVERGED at t=" << fmt(*traj.diverged_at);
  out << " -> " << dir.string() << '\n';
  return traj.diverged_at ? kDivergedOrInconclusive : kOk;
}

int cmd_compare_stability(const json& config, const OutputTarget& target, std::ostream& out) {
  const RunConfig rc = run_config_from(config);
  const StabilityComparison cmp = stability_comparison(rc);
  const StabilityReport& r = cmp.report;

  const fs::path dir = target.make("compare-stability", rc.n_modes, "both");
  write_json_file(dir / "effective_config.json", config);
  write_file(dir / "report.jsonl", [&](std::ostream& os) { write_json_lines(os, to_json_lines(r)); });
  write_file(dir / "diagnostics_galerkin.csv",
             [&](std::ostream& os) { write_diagnostics_csv(os, cmp.galerkin); });
  write_file(dir / "diagnostics_sine.csv",
             [&](std::ostream& os) { write_diagnostics_csv(os, cmp.sine); });
  write_file(dir / "modes_galerkin.csv",
             [&](std::ostream& os) { write_mode_pairs_csv(os, cmp.galerkin); });
  write_file(dir / "modes_sine.csv", [&](std::ostream& os) { write_mode_pairs_csv(os, cmp.sine); });
  write_json_file(dir / "timing.json",
                  json{{"elapsed_galerkin", r.elapsed_galerkin}, {"elapsed_sine", r.elapsed_sine}});

  out << "compare-stability N=" << r.n_modes << " t_break_galerkin=" << fmt(r.t_break_galerkin)
      << " t_break_sine=" << fmt(r.t_break_sine);
  if (r.ratio) out << " ratio=" << fmt(*r.ratio);
  if (r.ratio_lower_bound) out << " ratio>=" << fmt(*r.ratio_lower_bound) << " (sine unbroken)";
  if (r.ratio_upper_bound) out << " ratio<=" << fmt(*r.ratio_upper_bound) << " (galerkin unbroken)";
  if (r.inconclusive) out << " INCONCLUSIVE (extend t_end)";
  if (r.diverged_galerkin) out << " galerkin DIVERGED at t=" << fmt(*r.diverged_galerkin);
  if (r.diverged_sine) out << " sine DIVERGED at t=" << fmt(*r.diverged_sine);
  out << " -> " << dir.string() << '\n';
  const bool bad = r.inconclusive || r.diverged_galerkin || r.diverged_sine;
  return bad ? kDivergedOrInconclusive : kOk;
}

int cmd_converge(const json& config, const OutputTarget& target, std::ostream& out) {
  const double sigma = read_double(config, "converge.sigma");
  const std::vector<int> n_values = read_int_list(config, "converge.N_values");
  const int n_reference = read_int(config, "converge.N_reference");
  const double t_end = read_double(config, "converge.t_end");
  ConvergenceOptions options;
  options.dt = read_double(config, "converge.dt");
  options.record_every = read_int(config, "converge.record_every");
  options.support_radius = read_int(config, "converge.support_radius");

  ConvergenceReport report;
  try {
    report = convergence_experiment(sigma, read_seed(config), n_values, n_reference, t_end, options);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const fs::path dir = target.make("converge", n_reference, "sine");
  write_json_file(dir / "effective_config.json", config);
  write_file(dir / "report.jsonl",
             [&](std::ostream& os) { write_json_lines(os, to_json_lines(report)); });
  json timing{{"reference_elapsed_seconds", report.reference_elapsed_seconds}};
  for (const auto& e : report.entries)
    timing["elapsed_seconds"][std::to_string(e.n_modes)] = e.elapsed_seconds;
  write_json_file(dir / "timing.json", timing);

  bool all_valid = true;
  out << "converge sigma=" << fmt(sigma) << " N_ref=" << n_reference;
  for (const auto& e : report.entries) {
    out << " N" << e.n_modes << "=" << (e.valid ? fmt(e.sup_diff) : std::string("invalid"));
    if (e.diverged_at) out << "(DIVERGED at t=" << fmt(*e.diverged_at) << ")";
    all_valid = all_valid && e.valid;
  }
  out << " exponent=" << fmt(report.fitted_decay_exponent)
      << " r/2=" << fmt(report.theoretical_rate) << " -> " << dir.string() << '\n';
  return all_valid ? kOk : kDivergedOrInconclusive;
}

int cmd_structure_report(const json& config, const OutputTarget& target, std::ostream& out) {
  const auto pairs = read_value(config, "structure_report.pairs", [](const json& v) {
    std::vector<std::pair<Wavevector, Wavevector>> out;
    for (const auto& e : v) {
      if (!e.is_array() || e.size() != 2)
        throw json::type_error::create(302, "pairs entries must be [[n1, n2], [m1, m2]]", &e);
      out.emplace_back(to_wavevector(e[0]), to_wavevector(e[1]));
    }
    return out;
  });
  const std::vector<int> n_values = read_int_list(config, "structure_report.N_values");
  if (n_values.empty()) throw ConfigError("structure_report.N_values must not be empty");
  for (const int n : n_values)
    if (n < 1) throw ConfigError("structure_report.N_values entries must be positive");
  StructureConstantReport report;
  try {
    report = structure_constant_report(pairs, n_values);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const int n_max = *std::max_element(n_values.begin(), n_values.end());
  const fs::path dir = target.make("structure-report", n_max, "sine");
  write_json_file(dir / "effective_config.json", config);
  write_file(dir / "report.jsonl",
             [&](std::ostream& os) { write_json_lines(os, to_json_lines(report)); });
  out << "structure-report pairs=" << pairs.size();
  for (const auto& o : report.orders)
    out << " (" << o.n << "," << o.m << ")order=" << fmt(o.empirical_order);
  out << " -> " << dir.string() << '\n';
  return kOk;
}

int cmd_residual_report(const json& config, const OutputTarget& target, std::ostream& out) {
  const double sigma = read_double(config, "residual_report.sigma");
  const std::vector<int> n_values = read_int_list(config, "residual_report.N_values");
  const int field_n = read_int(config, "residual_report.field_N");
  for (const int n : n_values)
    if (n < 1) throw ConfigError("residual_report.N_values entries must be positive");
  ResidualReport report;
  try {
    report = residual_report(sigma, read_seed(config), n_values, field_n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const fs::path dir = target.make("residual-report", report.field_modes, "sine");
  write_json_file(dir / "effective_config.json", config);
  write_file(dir / "report.jsonl",
             [&](std::ostream& os) { write_json_lines(os, to_json_lines(report)); });
  out << "residual-report sigma=" << fmt(sigma) << " field_N=" << report.field_modes;
  for (const auto& row : report.rows) out << " N" << row.n_modes << "=" << fmt(row.residual_sum);
  out << " -> " << dir.string() << '\n';
  return kOk;
}

int cmd_casimirs(const json& config, const OutputTarget& target, std::ostream& out) {
  const std::string path =
      read_value(config, "casimirs.snapshot", [](const json& v) { return v.get<std::string>(); });
  const int pmax = read_int(config, "casimirs.pmax");
  if (path.empty()) throw ConfigError("casimirs.snapshot must name a snapshot file");
  if (pmax < 2) throw ConfigError("casimirs.pmax must be >= 2");
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open snapshot '" + path + "'");
  Snapshot snap = [&] {
    try {
      return read_snapshot(is);
    } catch (const std::runtime_error& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }();
  const std::vector<Complex> traces = trace_casimirs(field_to_matrix(snap.field), pmax);

  const int n_modes = snap.field.lattice().n_modes();
  const fs::path dir = target.make("casimirs", n_modes, "sine");
  write_json_file(dir / "effective_config.json", config);
  write_file(dir / "casimirs.jsonl", [&](std::ostream& os) {
    for (std::size_t i = 0; i < traces.size(); ++i) {
      os << json{{"N", n_modes}, {"t", snap.t}, {"p", static_cast<int>(i) + 2},
                 {"re", traces[i].real()}, {"im", traces[i].imag()}}
                .dump()
         << '\n';
    }
  });
  out << "casimirs N=" << n_modes << " t=" << fmt(snap.t);
  for (std::size_t i = 0; i < traces.size(); ++i) out << " tr W^" << i + 2 << "=" << fmt(traces[i].real());
  out << " -> " << dir.string() << '\n';
  return kOk;
}

json load_config(const std::string& path) {
  json config = default_config();
  if (path.empty()) return config;
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  json file;
  try {
    file = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  merge_strict(config, file, "");
  return config;
}

}  // namespace

std::string default_config_text() { return default_config().dump(2); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-mode 2D Euler lab: Galerkin and sine-bracket truncations"};
  app.name("zeitlin-lab");
  std::string subcommand;
  std::string config_path;
  std::string out_dir = "runs";
  std::string run_id;
  int jobs = 0;
  std::vector<std::string> overrides;
  bool print_defaults = false;
  app.add_option("subcommand", subcommand, "what to run")->check(CLI::IsMember(kSubcommands));
  app.add_option("--config", config_path, "JSON config file (defaults apply to missing keys)");
  app.add_option("--out", out_dir, "parent directory for run outputs")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--run-id", run_id, "use this instead of a timestamp in the output name");
  app.add_option("--set", overrides, "override a config key, e.g. --set run.N=11");
  app.add_flag("--print-defaults", print_defaults, "print the built-in config and exit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kConfigError;
  }
  if (print_defaults) {
    out << default_config_text() << '\n';
    return kOk;
  }
  if (subcommand.empty()) {
    err << "zeitlin-lab: missing subcommand\n" << app.help();
    return kConfigError;
  }

  set_max_parallelism(jobs);
  try {
    json config = load_config(config_path);
    for (const auto& assignment : overrides) apply_override(config, assignment);
    if (const char* env = std::getenv("ZEITLIN_LAB_SEED")) {
      std::uint64_t seed = 0;
      const char* end = env + std::char_traits<char>::length(env);
      const auto [ptr, ec] = std::from_chars(env, end, seed);
      if (ec != std::errc{} || ptr != end || ptr == env)
        throw ConfigError(std::string("ZEITLIN_LAB_SEED is not an unsigned integer: '") + env + "'");
      config["initial_condition"]["seed"] = seed;
    }

    const OutputTarget target{out_dir, run_id};
    if (subcommand == "simulate") return cmd_simulate(config, target, out);
    if (subcommand == "compare-stability") return cmd_compare_stability(config, target, out);
    if (subcommand == "converge") return cmd_converge(config, target, out);
    if (subcommand == "structure-report") return cmd_structure_report(config, target, out);
    if (subcommand == "residual-report") return cmd_residual_report(config, target, out);
    return cmd_casimirs(config, target, out);
  } catch (const ConfigError& e) {
    err << "zeitlin-lab: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "zeitlin-lab: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace zeitlin::cli

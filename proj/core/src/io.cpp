#include "zeitlin/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace zeitlin {

namespace {

using nlohmann::json;

json optional_value(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json wavevector_json(Wavevector k) { return json::array({k.m1, k.m2}); }

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_diagnostics_csv(std::ostream& os, const Trajectory& traj) {
  std::size_t n_casimirs = 0;
  for (const auto& rec : traj.records) n_casimirs = std::max(n_casimirs, rec.casimirs.size());
  os << "t,energy,enstrophy,sym_residual,l2_norm";
  for (std::size_t i = 0; i < n_casimirs; ++i)
    os << ",casimir_re_" << i + 2 << ",casimir_im_" << i + 2;
  os << '\n';
  for (const auto& rec : traj.records) {
    os << format_double(rec.t) << ',' << format_double(rec.energy) << ','
       << format_double(rec.enstrophy) << ',' << format_double(rec.symmetry_residual) << ','
       << format_double(rec.l2_norm);
    for (std::size_t i = 0; i < n_casimirs; ++i) {
      const Complex c = i < rec.casimirs.size() ? rec.casimirs[i] : Complex{};
      os << ',' << format_double(c.real()) << ',' << format_double(c.imag());
    }
    os << '\n';
  }
}

void write_mode_pairs_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,mode_k1,mode_k2,re_plus,im_plus,re_minus,im_minus\n";
  const auto& modes = traj.config.tracked_modes;
  for (std::size_t r = 0; r < traj.mode_samples.size(); ++r) {
    for (std::size_t i = 0; i < modes.size(); ++i) {
      const ModeSample& s = traj.mode_samples[r][i];
      os << format_double(traj.records[r].t) << ',' << modes[i].m1 << ',' << modes[i].m2 << ','
         << format_double(s.plus.real()) << ',' << format_double(s.plus.imag()) << ','
         << format_double(s.minus.real()) << ',' << format_double(s.minus.imag()) << '\n';
    }
  }
}

std::vector<std::string> to_json_lines(const ConvergenceReport& report) {
  std::vector<std::string> lines;
  for (const auto& e : report.entries) {
    json j;
    j["experiment"] = "converge";
    j["sigma"] = report.sigma;
    j["seed"] = report.seed;
    j["N_values"] = report.n_values;
    j["N_reference"] = report.n_reference;
    j["t_end"] = report.t_end;
    j["dt"] = report.dt;
    j["support_radius"] = report.support_radius;
    j["N"] = e.n_modes;
    j["sup_diff"] = e.sup_diff;
    j["sup_diff_h1"] = e.sup_diff_h1;
    j["valid"] = e.valid;
    j["diverged_at"] = optional_value(e.diverged_at);
    j["fitted_decay_exponent"] = optional_value(report.fitted_decay_exponent);
    j["theoretical_rate"] = report.theoretical_rate;
    lines.push_back(j.dump());
  }
  return lines;
}

std::vector<std::string> to_json_lines(const StabilityReport& r) {
  json j;
  j["experiment"] = "compare-stability";
  j["N"] = r.n_modes;
  j["dt"] = r.dt;
  j["t_end"] = r.t_end;
  j["tolerance"] = r.tolerance;
  j["t_break_galerkin"] = optional_value(r.t_break_galerkin);
  j["t_break_sine"] = optional_value(r.t_break_sine);
  j["ratio"] = optional_value(r.ratio);
  j["ratio_lower_bound"] = optional_value(r.ratio_lower_bound);
  j["ratio_upper_bound"] = optional_value(r.ratio_upper_bound);
  j["inconclusive"] = r.inconclusive;
  j["diverged_galerkin"] = optional_value(r.diverged_galerkin);
  j["diverged_sine"] = optional_value(r.diverged_sine);
  return {j.dump()};
}

std::vector<std::string> to_json_lines(const StructureConstantReport& report) {
  std::vector<std::string> lines;
  for (const auto& row : report.rows) {
    std::optional<double> order;
    for (const auto& o : report.orders)
      if (o.n == row.n && o.m == row.m) order = o.empirical_order;
    json j;
    j["experiment"] = "structure-report";
    j["n"] = wavevector_json(row.n);
    j["m"] = wavevector_json(row.m);
    j["N"] = row.n_modes;
    j["su"] = row.su;
    j["sdiff"] = row.sdiff;
    j["gap"] = row.gap;
    j["empirical_order"] = optional_value(order);
    lines.push_back(j.dump());
  }
  return lines;
}

std::vector<std::string> to_json_lines(const ResidualReport& report) {
  std::vector<std::string> lines;
  for (const auto& row : report.rows) {
    json j;
    j["experiment"] = "residual-report";
    j["sigma"] = report.sigma;
    j["seed"] = report.seed;
    j["field_N"] = report.field_modes;
    j["N"] = row.n_modes;
    j["epsilon"] = row.epsilon;
    j["residual_sum"] = row.residual_sum;
    lines.push_back(j.dump());
  }
  return lines;
}

void write_json_lines(std::ostream& os, const std::vector<std::string>& lines) {
  for (const auto& line : lines) os << line << '\n';
}

void write_snapshot(std::ostream& os, const ModeField& field, double t) {
  json j;
  j["N"] = field.lattice().n_modes();
  j["t"] = t;
  json modes = json::array();
  field.lattice().for_each([&](Wavevector k) {
    const Complex c = field[k];
    modes.push_back(json::array({k.m1, k.m2, c.real(), c.imag()}));
  });
  j["modes"] = std::move(modes);
  os << j.dump() << '\n';
}

Snapshot read_snapshot(std::istream& is) {
  json j;
  try {
    j = json::parse(is);
    const int n = j.at("N").get<int>();
    const ModeLattice lattice(n);
    ModeField field(lattice);
    for (const auto& entry : j.at("modes")) {
      const Wavevector k{entry.at(0).get<int>(), entry.at(1).get<int>()};
      if (!lattice.contains(k)) throw std::runtime_error("snapshot mode outside lattice");
      field[k] = Complex{entry.at(2).get<double>(), entry.at(3).get<double>()};
    }
    return {std::move(field), j.at("t").get<double>()};
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed snapshot: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed snapshot: ") + e.what());
  }
}

}  // namespace zeitlin

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zeitlin/harness.hpp"
#include "zeitlin/integrator.hpp"

namespace zeitlin {

/// `t,energy,enstrophy,sym_residual,l2_norm[,casimir_re_p,casimir_im_p ...]`,
/// one row per record, 17 significant digits, LF line endings.
void write_diagnostics_csv(std::ostream& os, const Trajectory& trajectory);

/// `t,mode_k1,mode_k2,re_plus,im_plus,re_minus,im_minus`, one row per
/// (record, tracked mode) where "plus" is ω_k and "minus" is ω_{-k}.
void write_mode_pairs_csv(std::ostream& os, const Trajectory& trajectory);

/// One JSON object per line; see README for the field list.
std::vector<std::string> to_json_lines(const ConvergenceReport& report);
std::vector<std::string> to_json_lines(const StabilityReport& report);
std::vector<std::string> to_json_lines(const StructureConstantReport& report);
std::vector<std::string> to_json_lines(const ResidualReport& report);
void write_json_lines(std::ostream& os, const std::vector<std::string>& lines);

struct Snapshot {
  ModeField field;
  double t = 0.0;
};

/// JSON snapshot: {"N": n, "t": t, "modes": [[k1, k2, re, im], ...]} with
/// every lattice mode listed in lexicographic order.
void write_snapshot(std::ostream& os, const ModeField& field, double t);
/// Throws std::runtime_error on malformed input.
Snapshot read_snapshot(std::istream& is);

/// %.17g formatting used by every CSV writer.
std::string format_double(double value);

}  // namespace zeitlin

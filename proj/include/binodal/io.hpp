#pragma once

#include <optional>
#include <string>

#include "binodal/bitangent.hpp"
#include "binodal/classifier.hpp"
#include "binodal/normal_forms.hpp"

namespace binodal::io {

/// Malformed input (schema violations, bad keys, parse failures). The
/// message carries a field/offset diagnostic.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JetInput {
  SurfaceJet f, g;
  std::optional<FamilyJet> f_family, g_family;  // present when tau blocks exist
};

/// Parse the jet JSON schema
///   {"f": {"20": num, ...}, "g": {...},
///    "f_tau1": {...}, "g_tau1": {...}, "f_tau2": {...}, "g_tau2": {...}}
/// Keys are "ij" digit pairs; f/g blocks reject i+j < 2, tau blocks i+j < 1,
/// all blocks reject i+j > 4.
JetInput parse_jet_json(const std::string& text);
JetInput load_jet_file(const std::string& path);

std::string case_report_json(const CaseReport& report);

/// Curve CSV, columns: index,s,u,v,x,y,res,cusp_M,cusp_N. Curves beyond the
/// first are separated by "# branch k" comment lines; an empty result is the
/// single comment "# isolated".
std::string trace_csv(const TraceResult& result);

std::string obj_text(const TieLineMesh& mesh);
std::string obj_text(const nf::CriminantPatch& patch, bool include_redundant_plane = true);

/// Normal-form binodal CSV, columns: q1,q2,q3,u,eps (q3 = eps = 0 on the
/// slice), branches separated by "# branch k" comments.
std::string nf_binodal_csv(const std::vector<nf::PlanarCurve>& branches);

/// All floating output at 17 significant digits.
std::string fmt(double v);

/// Write via a temp file in the same directory followed by a rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace binodal::io

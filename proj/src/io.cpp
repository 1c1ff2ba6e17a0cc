#include "binodal/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace binodal::io {

namespace {

using nlohmann::json;

IJ parse_key(const std::string& key, const std::string& block, bool tau_block) {
  if (key.size() != 2 || !std::isdigit(static_cast<unsigned char>(key[0])) ||
      !std::isdigit(static_cast<unsigned char>(key[1])))
    throw ParseError("block \"" + block + "\": key \"" + key +
                     "\" is not a two-digit \"ij\" index");
  int i = key[0] - '0', j = key[1] - '0';
  int lo = tau_block ? 1 : 2;
  if (i + j < lo || i + j > 4)
    throw ParseError("block \"" + block + "\": key \"" + key + "\" has degree " +
                     std::to_string(i + j) + ", allowed " + std::to_string(lo) + "..4");
  return {i, j};
}

std::map<IJ, double> parse_block(const json& obj, const std::string& name, bool tau_block) {
  if (!obj.is_object()) throw ParseError("block \"" + name + "\" must be a JSON object");
  std::map<IJ, double> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    IJ ij = parse_key(it.key(), name, tau_block);
    if (!it.value().is_number())
      throw ParseError("block \"" + name + "\", key \"" + it.key() + "\": not a number");
    out[ij] = it.value().get<double>();
  }
  return out;
}

}  // namespace

JetInput parse_jet_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  if (!doc.contains("f")) throw ParseError("missing required block \"f\"");
  if (!doc.contains("g")) throw ParseError("missing required block \"g\"");

  JetInput in;
  in.f.base_offset = 0.0;
  in.g.base_offset = 1.0;
  for (const auto& [ij, c] : parse_block(doc["f"], "f", false)) in.f.set(ij.first, ij.second, c);
  for (const auto& [ij, c] : parse_block(doc["g"], "g", false)) in.g.set(ij.first, ij.second, c);

  bool f_fam = doc.contains("f_tau1") || doc.contains("f_tau2");
  bool g_fam = doc.contains("g_tau1") || doc.contains("g_tau2");
  if (f_fam || g_fam) {
    FamilyJet ff, gf;
    ff.base = in.f;
    gf.base = in.g;
    if (doc.contains("f_tau1")) ff.tau1 = parse_block(doc["f_tau1"], "f_tau1", true);
    if (doc.contains("f_tau2")) ff.tau2 = parse_block(doc["f_tau2"], "f_tau2", true);
    if (doc.contains("g_tau1")) gf.tau1 = parse_block(doc["g_tau1"], "g_tau1", true);
    if (doc.contains("g_tau2")) gf.tau2 = parse_block(doc["g_tau2"], "g_tau2", true);
    in.f_family = std::move(ff);
    in.g_family = std::move(gf);
  }
  return in;
}

JetInput load_jet_file(const std::string& path) {
  std::ifstream fs(path);
  if (!fs) throw ParseError("cannot open input file: " + path);
  std::stringstream buf;
  buf << fs.rdbuf();
  return parse_jet_json(buf.str());
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string case_report_json(const CaseReport& report) {
  json doc;
  doc["label"] = std::string(to_string(report.label));
  doc["normal_form"] = report.normal_form;
  doc["c3"] = report.c3 ? json(*report.c3) : json(nullptr);
  doc["beaks_sign"] =
      report.beaks_sign ? json(*report.beaks_sign > 0 ? "+" : "-") : json(nullptr);
  doc["conditions"] = json::array();
  for (const auto& c : report.conditions) {
    doc["conditions"].push_back({{"name", c.name},
                                 {"value", c.value},
                                 {"required", c.require_zero ? "zero" : "nonzero"},
                                 {"satisfied", c.satisfied},
                                 {"margin", c.margin}});
  }
  return doc.dump(2) + "\n";
}

std::string trace_csv(const TraceResult& result) {
  std::string out = "index,s,u,v,x,y,res,cusp_M,cusp_N\n";
  if (result.isolated || result.curves.empty()) {
    out += "# isolated\n";
    return out;
  }
  int row = 0;
  for (size_t ci = 0; ci < result.curves.size(); ++ci) {
    const auto& c = result.curves[ci];
    if (ci > 0) out += "# branch " + std::to_string(ci + 1) + "\n";
    auto has = [](const std::vector<int>& v, int i) {
      return std::find(v.begin(), v.end(), i) != v.end();
    };
    for (size_t i = 0; i < c.points.size(); ++i) {
      const auto& p = c.points[i];
      out += std::to_string(row++) + "," + fmt(c.arclength[i]) + "," + fmt(p.u) + "," +
             fmt(p.v) + "," + fmt(p.x) + "," + fmt(p.y) + "," + fmt(c.residual[i]) + "," +
             (has(c.cusp_indices_M, static_cast<int>(i)) ? "1" : "0") + "," +
             (has(c.cusp_indices_N, static_cast<int>(i)) ? "1" : "0") + "\n";
    }
  }
  return out;
}

std::string obj_text(const TieLineMesh& mesh) {
  std::string out;
  for (const auto& v : mesh.vertices)
    out += "v " + fmt(v[0]) + " " + fmt(v[1]) + " " + fmt(v[2]) + "\n";
  for (const auto& f : mesh.faces)
    out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
           std::to_string(f[2] + 1) + " " + std::to_string(f[3] + 1) + "\n";
  return out;
}

std::string obj_text(const nf::CriminantPatch& patch, bool include_redundant_plane) {
  std::string out;
  std::vector<int> vid(patch.samples.size(), 0);
  int next = 1;
  for (size_t i = 0; i < patch.samples.size(); ++i) {
    if (!patch.samples[i].valid) continue;
    const auto& q = patch.samples[i].q;
    out += "v " + fmt(q[0]) + " " + fmt(q[1]) + " " + fmt(q[2]) + "\n";
    vid[i] = next++;
  }
  auto at = [&](int sheet, int iu, int ie) {
    return static_cast<size_t>(sheet) * patch.nu * patch.ne +
           static_cast<size_t>(iu) * patch.ne + ie;
  };
  for (int sheet = 0; sheet < patch.sheets; ++sheet)
    for (int iu = 0; iu + 1 < patch.nu; ++iu)
      for (int ie = 0; ie + 1 < patch.ne; ++ie) {
        int a = vid[at(sheet, iu, ie)], b = vid[at(sheet, iu + 1, ie)];
        int c = vid[at(sheet, iu + 1, ie + 1)], d = vid[at(sheet, iu, ie + 1)];
        if (a && b && c && d)
          out += "f " + std::to_string(a) + " " + std::to_string(b) + " " +
                 std::to_string(c) + " " + std::to_string(d) + "\n";
      }
  if (include_redundant_plane) {
    double lo = patch.redundant_extent[0], hi = patch.redundant_extent[1];
    int base = next;
    out += "v " + fmt(lo) + " " + fmt(lo) + " 0\n";
    out += "v " + fmt(hi) + " " + fmt(lo) + " 0\n";
    out += "v " + fmt(hi) + " " + fmt(hi) + " 0\n";
    out += "v " + fmt(lo) + " " + fmt(hi) + " 0\n";
    out += "f " + std::to_string(base) + " " + std::to_string(base + 1) + " " +
           std::to_string(base + 2) + " " + std::to_string(base + 3) + "\n";
  }
  return out;
}

std::string nf_binodal_csv(const std::vector<nf::PlanarCurve>& branches) {
  std::string out = "q1,q2,q3,u,eps\n";
  for (size_t bi = 0; bi < branches.size(); ++bi) {
    if (bi > 0) out += "# branch " + std::to_string(bi + 1) + "\n";
    const auto& b = branches[bi];
    for (size_t i = 0; i < b.q12.size(); ++i)
      out += fmt(b.q12[i][0]) + "," + fmt(b.q12[i][1]) + ",0," + fmt(b.u[i]) + ",0\n";
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + tmp.string());
    os << content;
  }
  fs::rename(tmp, target);
}

}  // namespace binodal::io

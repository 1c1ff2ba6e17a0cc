// Command-line front end: classify | trace | criminant | sweep | thermo.
// Exit codes: 0 success, 1 input/usage error, 2 legal-but-empty outcome
// (Unclassified, isolated binodal, supercritical temperature).

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "binodal/bitangent.hpp"
#include "binodal/classifier.hpp"
#include "binodal/io.hpp"
#include "binodal/normal_forms.hpp"
#include "binodal/thermo.hpp"

namespace {

using namespace binodal;

constexpr int kOk = 0, kInputError = 1, kEmptyOutcome = 2;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    io::atomic_write(out_path, content);
}

std::vector<double> parse_tau_range(const std::string& spec) {
  // start:end:count with count >= 1
  double start = 0, end = 0;
  int count = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &start, &end, &count) != 3 || count < 1)
    throw CLI::ValidationError("--tau-range", "expected start:end:count with count >= 1");
  std::vector<double> taus;
  for (int i = 0; i < count; ++i)
    taus.push_back(count == 1 ? start : start + (end - start) * i / (count - 1));
  return taus;
}

std::string tau_tag(double tau) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", tau);
  return buf;
}

struct ThermoFlags {
  double a = 3.0, b = 1.0 / 3.0, R = 8.0 / 3.0, T = 0.9;
  double a1 = 1.0, a2 = 1.0, a12 = 0.25, b1 = 0.1, b2 = 0.1;
  double vmin = 0.0, vmax = 0.0;
  int grid = 256;
};

int run(int argc, char** argv) {
  CLI::App app{"bitangent planes, binodal curves and criminant surfaces"};
  app.require_subcommand(1);

  std::string input, out, obj_out, normal_form, tau_range;
  double tol = kTol, step = 1e-3, domain_bound = 0.5, tau = 0.0, extension = 0.1;
  int max_steps = 10000, grid = 200;
  int sign_eps2 = 1, sign_v2 = 1, sign_q2sq = 1;
  bool want_obj = false;
  ThermoFlags tf;

  auto add_jet_opts = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "jet JSON file")->required();
    cmd->add_option("--out", out, "output file (default: stdout)");
    cmd->add_option("--tol", tol, "relative zero tolerance")->capture_default_str();
  };
  auto add_form_opts = [&](CLI::App* cmd) {
    cmd->add_option("--normal-form", normal_form,
                    "B2|B3|B4|C3|C3starPlus|C3starMinus|C4|C31|F4|B3starstar")
        ->required();
    cmd->add_option("--grid", grid, "samples per grid axis")->capture_default_str();
    cmd->add_option("--tau", tau, "family parameter")->capture_default_str();
    cmd->add_option("--tau-range", tau_range, "start:end:count sweep");
    cmd->add_option("--sign-eps2", sign_eps2, "+-1 for the eps^2 slot")->capture_default_str();
    cmd->add_option("--sign-v2", sign_v2, "+-1 for the v^2 slot")->capture_default_str();
    cmd->add_option("--sign-q2sq", sign_q2sq, "+-1 for the q2^2 slot")->capture_default_str();
    cmd->add_option("--out", out, "output stem (default: ./criminant)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify a jet pair");
  add_jet_opts(classify_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "trace the binodal curve of a jet pair");
  add_jet_opts(trace_cmd);
  trace_cmd->add_option("--step", step, "continuation step")->capture_default_str();
  trace_cmd->add_option("--max-steps", max_steps, "max steps per branch direction")
      ->capture_default_str();
  trace_cmd->add_option("--domain-bound", domain_bound, "|u|,|v|,|x|,|y| box bound")
      ->capture_default_str();
  trace_cmd->add_flag("--obj", want_obj, "also write the tie-line mesh OBJ");
  trace_cmd->add_option("--obj-out", obj_out, "tie-line mesh path (default: <out>.obj)");
  trace_cmd->add_option("--extension", extension, "tie-line extension beyond contacts")
      ->capture_default_str();

  auto* crim_cmd = app.add_subcommand("criminant", "criminant surface of a normal form");
  add_form_opts(crim_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "one-parameter family sweep");
  add_form_opts(sweep_cmd);

  auto* thermo_cmd = app.add_subcommand("thermo", "van der Waals thermodynamics");
  thermo_cmd->require_subcommand(1);
  auto add_fluid = [&](CLI::App* cmd) {
    cmd->add_option("--a", tf.a, "attraction parameter")->capture_default_str();
    cmd->add_option("--b", tf.b, "covolume")->capture_default_str();
    cmd->add_option("--R", tf.R, "gas constant")->capture_default_str();
    cmd->add_option("--out", out, "output file (default: stdout)");
  };
  auto* iso_cmd = thermo_cmd->add_subcommand("isotherm", "CSV of (V, P, A) at fixed T");
  add_fluid(iso_cmd);
  iso_cmd->add_option("--T", tf.T, "temperature")->capture_default_str();
  iso_cmd->add_option("--v-min", tf.vmin, "V window start (default 1.05 b)");
  iso_cmd->add_option("--v-max", tf.vmax, "V window end (default 10 V_c)");
  iso_cmd->add_option("--grid", tf.grid, "sample count")->capture_default_str();

  auto* max_cmd = thermo_cmd->add_subcommand("maxwell", "coexistence at fixed T");
  add_fluid(max_cmd);
  max_cmd->add_option("--T", tf.T, "temperature")->capture_default_str();
  max_cmd->add_option("--tol", tol, "equal-area quadrature tolerance")->capture_default_str();

  auto* spin_cmd = thermo_cmd->add_subcommand("spinodal", "A_VV = 0 roots at fixed T");
  add_fluid(spin_cmd);
  spin_cmd->add_option("--T", tf.T, "temperature")->capture_default_str();

  auto* crit_cmd = thermo_cmd->add_subcommand("critical", "critical point of the fluid");
  add_fluid(crit_cmd);

  auto* mix_cmd = thermo_cmd->add_subcommand("mixture-binodal",
                                             "binary-fluid binodal through the jet pipeline");
  mix_cmd->add_option("--a1", tf.a1)->capture_default_str();
  mix_cmd->add_option("--a2", tf.a2)->capture_default_str();
  mix_cmd->add_option("--a12", tf.a12)->capture_default_str();
  mix_cmd->add_option("--b1", tf.b1)->capture_default_str();
  mix_cmd->add_option("--b2", tf.b2)->capture_default_str();
  mix_cmd->add_option("--R", tf.R)->capture_default_str();
  mix_cmd->add_option("--T", tf.T, "temperature")->capture_default_str();
  mix_cmd->add_option("--v-min", tf.vmin, "seed search V window start (default 1.3 max b)");
  mix_cmd->add_option("--v-max", tf.vmax, "seed search V window end (default 30 max b)");
  mix_cmd->add_option("--grid", tf.grid, "seed search grid per axis")->capture_default_str();
  mix_cmd->add_option("--step", step, "continuation step in the pair frame")
      ->capture_default_str();
  mix_cmd->add_option("--max-steps", max_steps, "max steps per direction")
      ->capture_default_str();
  mix_cmd->add_option("--domain-bound", domain_bound, "trace box in the pair frame")
      ->capture_default_str();
  mix_cmd->add_option("--out", out, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed()) {
    io::JetInput in = io::load_jet_file(input);
    CaseReport rep = in.f_family ? classify(*in.f_family, *in.g_family, tol)
                                 : classify(in.f, in.g, tol);
    emit(out, io::case_report_json(rep));
    return rep.label == CaseLabel::Unclassified ? kEmptyOutcome : kOk;
  }

  if (trace_cmd->parsed()) {
    io::JetInput in = io::load_jet_file(input);
    TraceOptions opt{step, max_steps, domain_bound, 1e-12};
    TraceResult res = trace_binodal(in.f, in.g, opt);
    emit(out, io::trace_csv(res));
    if (want_obj && !res.curves.empty()) {
      TieLineMesh mesh = tie_line_mesh(res.curves.front(), in.f, in.g, extension);
      std::string path = !obj_out.empty() ? obj_out : (out.empty() ? "tie_lines.obj" : out + ".obj");
      io::atomic_write(path, io::obj_text(mesh));
    }
    return res.isolated ? kEmptyOutcome : kOk;
  }

  if (crim_cmd->parsed() || sweep_cmd->parsed()) {
    nf::NormalFormSpec spec;
    spec.label = label_from_string(normal_form);  // throws on unknown names
    if (spec.label == CaseLabel::B3starstar) {
      std::cerr << "error: B3starstar criminant: modulus unspecified\n";
      return kInputError;
    }
    spec.sign_eps2 = sign_eps2;
    spec.sign_v2 = sign_v2;
    spec.sign_q2sq = sign_q2sq;
    spec.tau = tau;
    std::string stem = out.empty() ? "criminant" : out;
    if (!tau_range.empty()) {
      std::vector<double> taus = parse_tau_range(tau_range);
      auto frames = nf::sweep_family(spec, taus, grid);
      for (const auto& fr : frames) {
        std::string base = stem + "/frames/tau_" + tau_tag(fr.tau);
        io::atomic_write(base + ".obj", io::obj_text(fr.patch));
        io::atomic_write(base + ".csv", io::nf_binodal_csv(fr.binodal));
      }
      std::cout << frames.size() << " frames written under " << stem << "/frames\n";
      return kOk;
    }
    spec.tau = tau;
    auto patch = nf::criminant_numeric(spec, grid, grid);
    auto binodal = nf::binodal_from_normal_form(spec, 2 * grid);
    io::atomic_write(stem + ".obj", io::obj_text(patch));
    io::atomic_write(stem + ".csv", io::nf_binodal_csv(binodal));
    std::cout << "wrote " << stem << ".obj and " << stem << ".csv ("
              << patch.elimination_note << ")\n";
    return kOk;
  }

  if (thermo_cmd->parsed()) {
    thermo::FluidParams fp{tf.a, tf.b, tf.R};
    if (iso_cmd->parsed()) {
      double vlo = tf.vmin > 0 ? tf.vmin : 1.05 * fp.b;
      double vhi = tf.vmax > 0 ? tf.vmax : 10.0 * thermo::critical_point(fp).V;
      std::string csv = "V,P,A\n";
      for (int i = 0; i < tf.grid; ++i) {
        double V = vlo + (vhi - vlo) * i / (tf.grid - 1);
        csv += io::fmt(V) + "," + io::fmt(thermo::vdw_pressure(V, tf.T, fp)) + "," +
               io::fmt(thermo::helmholtz_single(V, tf.T, fp)) + "\n";
      }
      emit(out, csv);
      return kOk;
    }
    if (max_cmd->parsed()) {
      auto r = thermo::maxwell_construction(tf.T, fp, tol);
      std::string csv = "T,V_liq,V_vap,P_tie,residual\n";
      csv += io::fmt(tf.T) + "," + io::fmt(r.V_liq) + "," + io::fmt(r.V_vap) + "," +
             io::fmt(r.P_tie) + "," + io::fmt(r.equal_area_residual) + "\n";
      emit(out, csv);
      return kOk;
    }
    if (spin_cmd->parsed()) {
      auto s = thermo::spinodal_single(tf.T, fp);
      std::string csv = "T,V_minus,V_plus\n";
      csv += io::fmt(tf.T) + "," + io::fmt(s.V_minus) + "," + io::fmt(s.V_plus) + "\n";
      emit(out, csv);
      return kOk;
    }
    if (crit_cmd->parsed()) {
      auto c = thermo::critical_point(fp);
      std::string csv = "T_c,V_c,P_c\n";
      csv += io::fmt(c.T) + "," + io::fmt(c.V) + "," + io::fmt(c.P) + "\n";
      emit(out, csv);
      return kOk;
    }
    if (mix_cmd->parsed()) {
      thermo::MixtureParams mp{tf.a1, tf.a2, tf.a12, tf.b1, tf.b2, tf.R};
      thermo::SeedBox box;
      box.Vlo = tf.vmin;
      box.Vhi = tf.vmax;
      box.grid = tf.grid > 4 ? std::min(tf.grid, 96) : 48;
      TraceOptions opt{step, max_steps, domain_bound, 1e-12};
      auto mb = thermo::mixture_binodal(tf.T, mp, box, opt);
      std::string csv = "s,V1,x1,V2,x2,P,mu_resid\n";
      for (size_t i = 0; i < mb.s.size(); ++i)
        csv += io::fmt(mb.s[i]) + "," + io::fmt(mb.side1[i][0]) + "," +
               io::fmt(mb.side1[i][1]) + "," + io::fmt(mb.side2[i][0]) + "," +
               io::fmt(mb.side2[i][1]) + "," + io::fmt(mb.P1[i]) + "," +
               io::fmt(mb.mu_resid[i]) + "\n";
      emit(out, csv);
      return kOk;
    }
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const binodal::thermo::SupercriticalError& e) {
    std::cerr << "supercritical: " << e.what() << "\n";
    return kEmptyOutcome;
  } catch (const binodal::io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

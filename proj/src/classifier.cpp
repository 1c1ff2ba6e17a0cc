#include "binodal/classifier.hpp"

#include <cmath>
#include <stdexcept>

namespace binodal {

namespace {

struct Ctx {
  const SurfaceJet& f;
  const SurfaceJet& g;
  double tol;
  double band;  // tol * (1 + max|coeff| over both jets)
  CaseReport report;

  bool nonzero(const std::string& name, double value) {
    bool ok = std::abs(value) > band;
    report.conditions.push_back({name, value, false, ok, std::abs(value) - band});
    return ok;
  }
  bool zero(const std::string& name, double value) {
    bool ok = std::abs(value) <= band;
    report.conditions.push_back({name, value, true, ok, band - std::abs(value)});
    return ok;
  }
  // two-way branch: records the condition with the polarity of the branch
  // actually taken, so a matched case lists only satisfied conditions
  bool branch(const std::string& name, double value) {
    bool nz = std::abs(value) > band;
    report.conditions.push_back({name, value, !nz, true,
                                 nz ? std::abs(value) - band : band - std::abs(value)});
    return nz;
  }
};

std::string render_form(CaseLabel label, const SurfaceJet& f) {
  double discF = discriminant(f);
  std::string sv = discF < 0 ? "+ " : "- ";          // B family: M elliptic -> +v^2
  std::string svc = f.coeff(0, 2) >= 0 ? "+ " : "- ";  // C family: sign of f02
  switch (label) {
    case CaseLabel::B2hat:
      return "-q3 + eps*(u^2 " + sv + "v^2 + eps + q1)";
    case CaseLabel::B3hat:
      return "-q3 + eps*(u^2 " + sv + "v^2 +- eps^2 + q2*eps + q1)";
    case CaseLabel::B4hat:
      return "-q3 + eps*(u^2 " + sv + "v^2 + eps^3 + tau*eps^2 + q2*eps + q1)";
    case CaseLabel::B3starstar:
      return "-q3 + eps*(u^2 +- v^2 +- eps^2 + a(q1,q2)*eps +- q1^2 +- q2^2 + tau)";
    case CaseLabel::C3hat:
      return "-q3 + eps*(u^3 + u*eps + eps + q2*u + q1 " + svc + "v^2)";
    case CaseLabel::C3starPlus:
      return "-q3 + eps*(u^3 + u*eps + eps + (q2^2 - tau)*u + q1 " + svc + "v^2)";
    case CaseLabel::C3starMinus:
      return "-q3 + eps*(u^3 + u*eps + eps + (-q2^2 - tau)*u + q1 " + svc + "v^2)";
    case CaseLabel::C4hat:
      return "-q3 + eps*(u^4 + tau*u^2 + u*eps + eps + q2*u + q1 " + svc + "v^2)";
    case CaseLabel::C31hat:
      return "-q3 + eps*(u^3 + u*(tau*eps +- eps^2) + eps + q2*u + q1 " + svc + "v^2)";
    case CaseLabel::F4hat:
      return "-q3 + eps*(u^3 + u*eps +- eps^2 + tau*eps + q2*u + q1 " + svc + "v^2)";
    case CaseLabel::ThreeE:
      return "C3star form with the roles of M and N swapped";
    default:
      return "";
  }
}

double c3_factor(const SurfaceJet& j) {
  double c02 = j.coeff(0, 2), c11 = j.coeff(1, 1);
  double c30 = j.coeff(3, 0), c21 = j.coeff(2, 1), c12 = j.coeff(1, 2), c03 = j.coeff(0, 3);
  double r = c11 / (2.0 * c02);
  return c30 - c21 * r + c12 * r * r - c03 * r * r * r;
}

void run_tree(Ctx& c) {
  const SurfaceJet &f = c.f, &g = c.g;
  double discF = discriminant(f), discG = discriminant(g);
  double g02 = g.coeff(0, 2), g03 = g.coeff(0, 3), g04 = g.coeff(0, 4);
  double g11 = g.coeff(1, 1), g20 = g.coeff(2, 0);
  double f02 = f.coeff(0, 2), f11 = f.coeff(1, 1), f20 = f.coeff(2, 0), f03 = f.coeff(0, 3);
  double D = f11 * g02 - f02 * g11;

  if (std::abs(discF) > c.band) {
    // B family: M is not parabolic
    c.nonzero("disc_f", discF);
    if (c.branch("g02", g02)) {
      c.report.label = CaseLabel::B2hat;  // Case 1
      return;
    }
    if (c.branch("g11", g11)) {
      if (c.branch("g03", g03)) {
        c.report.label = CaseLabel::B3hat;  // Case 2
        return;
      }
      if (c.nonzero("g04", g04)) {
        c.report.label = CaseLabel::B4hat;  // Case 2a
        return;
      }
      return;  // g02=g03=g04=0 along the tie line: beyond the taxonomy
    }
    // Case 2b: g02 = g11 = 0
    if (c.nonzero("g20", g20) && c.nonzero("g03", g03)) {
      c.report.label = CaseLabel::B3starstar;
      return;
    }
    return;
  }

  // M parabolic from here on
  c.zero("disc_f", discF);
  if (std::abs(f20) <= c.band && std::abs(f11) <= c.band && std::abs(f02) <= c.band) {
    c.zero("flat umbilic on M", 1.0);  // recorded as an unsatisfiable marker
    return;
  }
  if (std::abs(f02) <= c.band && std::abs(f11) <= c.band) {
    // asymptotic direction of M along the tie line: Case 3e
    c.zero("f02", f02);
    c.zero("f11", f11);
    if (c.nonzero("f20", f20) && c.nonzero("f03", f03) && c.nonzero("disc_g", discG)) {
      c.report.label = CaseLabel::ThreeE;
      c.report.c3.reset();
    }
    return;
  }
  if (!c.nonzero("f02", f02)) return;  // parabolic, f11 != 0, f02 = 0: degenerate frame

  CuspOfGauss cog = is_cusp_of_gauss(f, c.tol);
  if (cog.is_cusp) {
    // Case 3b
    c.zero("cubic_f on asymptotic direction", cog.margin);
    SurfaceJet nf = to_gauss_cusp_frame(f, c.tol);
    double nd = nf.coeff(2, 1) * nf.coeff(2, 1) - 4.0 * nf.coeff(4, 0);
    if (c.nonzero("f21^2 - 4 f40 (cusp frame)", nd) && c.nonzero("disc_g", discG) &&
        c.nonzero("g02", g02) && c.nonzero("f11*g02 - f02*g11", D)) {
      c.report.label = CaseLabel::C4hat;
    }
    return;
  }
  c.nonzero("cubic_f on asymptotic direction", cog.margin);

  if (!c.branch("disc_g", discG)) {
    // Case 3a: both parabolic
    if (!c.nonzero("g02", g02)) return;
    CuspOfGauss cogG = is_cusp_of_gauss(g, c.tol);
    if (!c.nonzero("cubic_g on asymptotic direction", cogG.margin)) return;
    if (!c.nonzero("f11*g02 - f02*g11", D)) return;
    double v = c3(f, g, c.tol);
    c.report.c3 = v;
    c.report.beaks_sign = v < 0 ? 1 : -1;
    if (!c.nonzero("c3", v)) {
      c.report.c3.reset();
      c.report.beaks_sign.reset();
      return;
    }
    c.report.label = v > 0 ? CaseLabel::C3starPlus : CaseLabel::C3starMinus;
    return;
  }

  if (c.branch("g02", g02)) {
    if (c.branch("f11*g02 - f02*g11", D)) {
      c.report.label = CaseLabel::C3hat;  // Case 3
    } else {
      c.report.label = CaseLabel::C31hat;  // Case 3c: the equality side
    }
    return;
  }
  // Case 3d: g02 = 0
  if (c.nonzero("g03", g03) && c.nonzero("f02*g11", f02 * g11)) {
    c.report.label = CaseLabel::F4hat;
    return;
  }
}

}  // namespace

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::B2hat: return "B2hat";
    case CaseLabel::B3hat: return "B3hat";
    case CaseLabel::B4hat: return "B4hat";
    case CaseLabel::B3starstar: return "B3starstar";
    case CaseLabel::C3hat: return "C3hat";
    case CaseLabel::C3starPlus: return "C3starPlus";
    case CaseLabel::C3starMinus: return "C3starMinus";
    case CaseLabel::C4hat: return "C4hat";
    case CaseLabel::C31hat: return "C31hat";
    case CaseLabel::F4hat: return "F4hat";
    case CaseLabel::ThreeE: return "ThreeE";
    case CaseLabel::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

CaseLabel label_from_string(std::string_view name) {
  auto eq = [&](std::string_view a, std::string_view b) { return name == a || name == b; };
  if (eq("B2", "B2hat")) return CaseLabel::B2hat;
  if (eq("B3", "B3hat")) return CaseLabel::B3hat;
  if (eq("B4", "B4hat")) return CaseLabel::B4hat;
  if (eq("B3starstar", "B3**")) return CaseLabel::B3starstar;
  if (eq("C3", "C3hat")) return CaseLabel::C3hat;
  if (eq("C3starPlus", "C3*+")) return CaseLabel::C3starPlus;
  if (eq("C3starMinus", "C3*-")) return CaseLabel::C3starMinus;
  if (eq("C4", "C4hat")) return CaseLabel::C4hat;
  if (eq("C31", "C31hat")) return CaseLabel::C31hat;
  if (eq("F4", "F4hat")) return CaseLabel::F4hat;
  if (eq("ThreeE", "3e")) return CaseLabel::ThreeE;
  if (eq("Unclassified", "unclassified")) return CaseLabel::Unclassified;
  throw std::invalid_argument("unknown case label: " + std::string(name));
}

CaseReport classify(const SurfaceJet& f, const SurfaceJet& g, double tol) {
  Ctx c{f, g, tol, tol * std::max(f.scale(), g.scale()), {}};
  run_tree(c);
  c.report.normal_form = render_form(c.report.label, f);
  return c.report;
}

CaseReport classify(const FamilyJet& f, const FamilyJet& g, double tol) {
  CaseReport rep = classify(f.base, g.base, tol);
  double band = tol * std::max(f.base.scale(), g.base.scale());
  auto add_nonzero = [&](const std::string& name, double value) {
    rep.conditions.push_back({name, value, false, std::abs(value) > band,
                              std::abs(value) - band});
  };
  auto disc_rate = [](const FamilyJet& j) {
    // d/dtau of (c11^2 - 4 c20 c02) at tau = 0
    return 2.0 * j.coeff(1, 1, 0) * j.coeff(1, 1, 1) -
           4.0 * (j.coeff(2, 0, 1) * j.coeff(0, 2, 0) + j.coeff(2, 0, 0) * j.coeff(0, 2, 1));
  };
  switch (rep.label) {
    case CaseLabel::B4hat:
      add_nonzero("g021", g.coeff(0, 2, 1));
      break;
    case CaseLabel::C3starPlus:
    case CaseLabel::C3starMinus:
      add_nonzero("d(disc_g)/dtau", disc_rate(g));
      break;
    case CaseLabel::ThreeE:
      add_nonzero("d(disc_f)/dtau", disc_rate(f));
      break;
    default:
      break;
  }
  return rep;
}

double c3(const SurfaceJet& f, const SurfaceJet& g, double tol) {
  double band = tol * std::max(f.scale(), g.scale());
  if (std::abs(f.coeff(0, 2)) <= band || std::abs(g.coeff(0, 2)) <= band)
    throw std::domain_error("c3: undefined when f02 or g02 vanishes");
  return -c3_factor(f) * c3_factor(g);
}

int beaks_criterion(const SurfaceJet& f, const SurfaceJet& g, double tol) {
  double v = -c3(f, g, tol);
  double band = tol * std::max(f.scale(), g.scale());
  if (std::abs(v) <= band) return 0;
  return v > 0 ? 1 : -1;
}

double cusp_invariant(const SurfaceJet& f, const SurfaceJet& g, double tol) {
  double band = tol * std::max(f.scale(), g.scale());
  double discF = discriminant(f);
  if (std::abs(discF) <= band)
    throw std::domain_error("cusp_invariant: M must not be parabolic");
  SquaredForm sf = parabolic_form(g, tol);  // throws if g is not parabolic
  if (std::abs(sf.b) <= band)
    throw std::domain_error("cusp_invariant: asymptotic direction of N along the tie line");
  const double a = sf.a, b = sf.b, s = sf.sigma;
  double K = a * a * a * s * g.coeff(0, 3) - a * a * b * s * g.coeff(1, 2) +
             a * b * b * s * g.coeff(2, 1) - b * b * b * s * g.coeff(3, 0);
  double b6 = std::pow(b, 6);
  return 6.0 * K * K / (b6 * discF);
}

SurfaceJet to_gauss_cusp_frame(const SurfaceJet& f, double tol) {
  SquaredForm sf = parabolic_form(f, tol);
  SurfaceJet jf = sf.sigma < 0 ? scale_jet(f, -1.0) : f;
  // X along the asymptotic direction (b, -a)/|(a,b)|, Y lifting (0, 1/sqrt(c02'))
  double nrm = std::hypot(sf.a, sf.b);
  double c02p = jf.coeff(0, 2);
  if (c02p <= tol * jf.scale())
    throw std::domain_error("to_gauss_cusp_frame: requires c02 != 0 after normalization");
  double m00 = sf.b / nrm, m01 = 0.0;
  double m10 = -sf.a / nrm, m11 = 1.0 / std::sqrt(c02p);
  return substitute_linear(jf, m00, m01, m10, m11);
}

std::array<double, 3> gauss_cusp_curves(const SurfaceJet& f, double tol) {
  double band = tol * f.scale();
  if (std::abs(f.coeff(2, 0)) > band || std::abs(f.coeff(1, 1)) > band ||
      std::abs(f.coeff(0, 2) - 1.0) > band || std::abs(f.coeff(3, 0)) > band)
    throw std::invalid_argument(
        "gauss_cusp_curves: jet must be in the frame z = y^2 + f21 x^2 y + ... (no x^3 term)");
  double f21 = f.coeff(2, 1), f40 = f.coeff(4, 0);
  if (std::abs(f21) <= band) throw std::domain_error("gauss_cusp_curves: f21 ~= 0");
  if (std::abs(f21 * f21 - 4.0 * f40) <= band)
    throw std::domain_error("gauss_cusp_curves: degenerate cusp of Gauss (f21^2 ~= 4 f40)");
  return {-2.0 * f40 / f21, -f21 / 2.0, -6.0 * f40 / f21};
}

}  // namespace binodal

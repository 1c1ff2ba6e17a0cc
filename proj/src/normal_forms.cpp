#include "binodal/normal_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace binodal::nf {

namespace {

void check_form(const NormalFormSpec& spec) {
  switch (spec.label) {
    case CaseLabel::B3starstar:
      throw std::domain_error(
          "B3starstar: the functional modulus a(q1,q2) is unspecified; no generating value");
    case CaseLabel::Unclassified:
      throw std::invalid_argument("no normal form for Unclassified");
    default:
      break;
  }
}

int q2sq_sign(const NormalFormSpec& spec) {
  if (spec.label == CaseLabel::C3starPlus) return +1;
  if (spec.label == CaseLabel::C3starMinus) return -1;
  return spec.sign_q2sq;
}

}  // namespace

double generating_value(const NormalFormSpec& spec, double u, double v, double eps,
                        double q1, double q2, double q3) {
  check_form(spec);
  const double sv = spec.sign_v2, se = spec.sign_eps2, tau = spec.tau;
  switch (spec.label) {
    case CaseLabel::B2hat:
      return -q3 + eps * (u * u + sv * v * v + eps + q1);
    case CaseLabel::B3hat:
      return -q3 + eps * (u * u + sv * v * v + se * eps * eps + q2 * eps + q1);
    case CaseLabel::B4hat:
      return -q3 + eps * (u * u + sv * v * v + eps * eps * eps + tau * eps * eps +
                          q2 * eps + q1);
    case CaseLabel::C3hat:
      return -q3 + eps * (u * u * u + u * eps + eps + q2 * u + q1 + sv * v * v);
    case CaseLabel::C3starPlus:
    case CaseLabel::C3starMinus:
    case CaseLabel::ThreeE: {
      double sq = q2sq_sign(spec);
      return -q3 + eps * (u * u * u + u * eps + eps + (sq * q2 * q2 - tau) * u + q1 +
                          sv * v * v);
    }
    case CaseLabel::C4hat:
      return -q3 + eps * (u * u * u * u + tau * u * u + u * eps + eps + q2 * u + q1 +
                          sv * v * v);
    case CaseLabel::C31hat:
      return -q3 + eps * (u * u * u + u * (tau * eps + se * eps * eps) + eps + q2 * u +
                          q1 + sv * v * v);
    case CaseLabel::F4hat:
      return -q3 + eps * (u * u * u + u * eps + se * eps * eps + tau * eps + q2 * u +
                          q1 + sv * v * v);
    default:
      throw std::invalid_argument("no normal form for this label");
  }
}

GeneratingDerivs generating_derivs(const NormalFormSpec& spec, double u, double v,
                                   double eps, double q1, double q2, double q3) {
  check_form(spec);
  const double sv = spec.sign_v2, se = spec.sign_eps2, tau = spec.tau;
  GeneratingDerivs d;
  d.F = generating_value(spec, u, v, eps, q1, q2, q3);
  d.Fv = 2.0 * sv * eps * v;
  switch (spec.label) {
    case CaseLabel::B2hat:
      d.Fu = 2.0 * eps * u;
      d.Feps = u * u + sv * v * v + 2.0 * eps + q1;
      break;
    case CaseLabel::B3hat:
      d.Fu = 2.0 * eps * u;
      d.Feps = u * u + sv * v * v + 3.0 * se * eps * eps + 2.0 * q2 * eps + q1;
      break;
    case CaseLabel::B4hat:
      d.Fu = 2.0 * eps * u;
      d.Feps = u * u + sv * v * v + 4.0 * eps * eps * eps + 3.0 * tau * eps * eps +
               2.0 * q2 * eps + q1;
      break;
    case CaseLabel::C3hat:
      d.Fu = eps * (3.0 * u * u + eps + q2);
      d.Feps = u * u * u + 2.0 * u * eps + 2.0 * eps + q2 * u + q1 + sv * v * v;
      break;
    case CaseLabel::C3starPlus:
    case CaseLabel::C3starMinus:
    case CaseLabel::ThreeE: {
      double c = q2sq_sign(spec) * q2 * q2 - tau;
      d.Fu = eps * (3.0 * u * u + eps + c);
      d.Feps = u * u * u + 2.0 * u * eps + 2.0 * eps + c * u + q1 + sv * v * v;
      break;
    }
    case CaseLabel::C4hat:
      d.Fu = eps * (4.0 * u * u * u + 2.0 * tau * u + eps + q2);
      d.Feps = u * u * u * u + tau * u * u + 2.0 * u * eps + 2.0 * eps + q2 * u + q1 +
               sv * v * v;
      break;
    case CaseLabel::C31hat:
      d.Fu = eps * (3.0 * u * u + tau * eps + se * eps * eps + q2);
      d.Feps = u * u * u + u * (2.0 * tau * eps + 3.0 * se * eps * eps) + 2.0 * eps +
               q2 * u + q1 + sv * v * v;
      break;
    case CaseLabel::F4hat:
      d.Fu = eps * (3.0 * u * u + eps + q2);
      d.Feps = u * u * u + 2.0 * u * eps + 3.0 * se * eps * eps + 2.0 * tau * eps +
               q2 * u + q1 + sv * v * v;
      break;
    default:
      break;
  }
  return d;
}

std::array<double, 3> criminant_closed_form_C3(double u, double eps) {
  return {2.0 * u * u * u - eps * u - 2.0 * eps, -3.0 * u * u - eps,
          -eps * eps * u - eps * eps};
}

CriminantPatch criminant_numeric(const NormalFormSpec& spec, int nu, int ne, double ulo,
                                 double uhi, double elo, double ehi) {
  check_form(spec);
  const CaseLabel L = spec.label;
  const double se = spec.sign_eps2, tau = spec.tau;
  const bool bfam = (L == CaseLabel::B2hat || L == CaseLabel::B3hat || L == CaseLabel::B4hat);
  const bool c3star = (L == CaseLabel::C3starPlus || L == CaseLabel::C3starMinus);
  if (L == CaseLabel::ThreeE)
    throw std::invalid_argument("criminant_numeric: use C3starPlus/C3starMinus for Case 3a/3e");

  CriminantPatch patch;
  patch.spec = spec;
  patch.nu = nu;
  patch.ne = ne;
  patch.sheets = c3star ? 2 : 1;
  patch.redundant_extent = {std::min(ulo, elo), std::max(uhi, ehi)};
  if (bfam) {
    patch.elimination_note =
        "F_u = 0 forces u = 0; grid u-axis is the free parameter t = q2; "
        "F_eps = 0 -> q1, F = 0 -> q3";
  } else if (c3star) {
    patch.elimination_note =
        "v = 0 from F_v; F_u = 0 is quadratic in q2 (two sheets, negative "
        "radicand skipped); F_eps = 0 -> q1, F = 0 -> q3";
  } else {
    patch.elimination_note = "v = 0 from F_v; F_u = 0 -> q2, F_eps = 0 -> q1, F = 0 -> q3";
  }
  patch.samples.resize(static_cast<size_t>(patch.sheets) * nu * ne);

  for (int iu = 0; iu < nu; ++iu) {
    double t = nu > 1 ? ulo + (uhi - ulo) * iu / (nu - 1) : ulo;
    for (int ie = 0; ie < ne; ++ie) {
      double eps = ne > 1 ? elo + (ehi - elo) * ie / (ne - 1) : elo;
      auto put = [&](int sheet, const std::array<double, 3>& q) {
        auto& s = patch.samples[static_cast<size_t>(sheet) * nu * ne +
                                static_cast<size_t>(iu) * ne + ie];
        s.u = t;
        s.eps = eps;
        s.u_crit = bfam ? 0.0 : t;  // F_u = 0 forces u = 0 for the B family
        s.q = q;
        s.valid = true;
      };
      switch (L) {
        case CaseLabel::B2hat:
          put(0, {-2.0 * eps, t, -eps * eps});
          break;
        case CaseLabel::B3hat:
          put(0, {-3.0 * se * eps * eps - 2.0 * t * eps, t,
                  -2.0 * se * eps * eps * eps - t * eps * eps});
          break;
        case CaseLabel::B4hat:
          put(0, {-4.0 * eps * eps * eps - 3.0 * tau * eps * eps - 2.0 * t * eps, t,
                  -3.0 * eps * eps * eps * eps - 2.0 * tau * eps * eps * eps -
                      t * eps * eps});
          break;
        case CaseLabel::C3hat:
          put(0, criminant_closed_form_C3(t, eps));
          break;
        case CaseLabel::C3starPlus:
        case CaseLabel::C3starMinus: {
          double sq = q2sq_sign(spec);
          double radicand = sq * (tau - eps - 3.0 * t * t);
          if (radicand < 0) {
            patch.skipped += 2;
            break;
          }
          double q2 = std::sqrt(radicand);
          double q1 = 2.0 * t * t * t - eps * t - 2.0 * eps;
          double q3 = -eps * eps * t - eps * eps;
          put(0, {q1, q2, q3});
          put(1, {q1, -q2, q3});
          break;
        }
        case CaseLabel::C4hat:
          put(0, {3.0 * t * t * t * t + tau * t * t - t * eps - 2.0 * eps,
                  -4.0 * t * t * t - 2.0 * tau * t - eps, -eps * eps * t - eps * eps});
          break;
        case CaseLabel::C31hat:
          put(0, {2.0 * t * t * t - tau * t * eps - 2.0 * se * t * eps * eps - 2.0 * eps,
                  -3.0 * t * t - tau * eps - se * eps * eps,
                  -tau * t * eps * eps - 2.0 * se * t * eps * eps * eps - eps * eps});
          break;
        case CaseLabel::F4hat:
          put(0, {2.0 * t * t * t - t * eps - 3.0 * se * eps * eps - 2.0 * tau * eps,
                  -3.0 * t * t - eps,
                  -t * eps * eps - 2.0 * se * eps * eps * eps - tau * eps * eps});
          break;
        default:
          throw std::invalid_argument("criminant_numeric: unsupported label");
      }
    }
  }
  return patch;
}

std::vector<PlanarCurve> binodal_from_normal_form(const NormalFormSpec& spec, int nu,
                                                  double ulo, double uhi) {
  check_form(spec);
  nu |= 1;  // odd sample count so a symmetric grid hits u = 0 exactly
  const CaseLabel L = spec.label;
  const double tau = spec.tau;
  auto grid = [&](double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = n > 1 ? lo + (hi - lo) * i / (n - 1) : lo;
    return g;
  };
  std::vector<PlanarCurve> out;

  auto single = [&](auto&& map) {
    PlanarCurve c;
    for (double u : grid(ulo, uhi, nu)) {
      c.q12.push_back(map(u));
      c.u.push_back(u);
    }
    out.push_back(std::move(c));
  };

  switch (L) {
    case CaseLabel::B2hat:
    case CaseLabel::B3hat:
    case CaseLabel::B4hat:
      // eps -> 0 collapses the patch onto the q2-axis
      single([](double t) { return std::array<double, 2>{0.0, t}; });
      break;
    case CaseLabel::C3hat:
    case CaseLabel::C31hat:
    case CaseLabel::F4hat:
      single([](double u) { return std::array<double, 2>{2 * u * u * u, -3 * u * u}; });
      break;
    case CaseLabel::C4hat:
      single([&](double u) {
        return std::array<double, 2>{3 * u * u * u * u + tau * u * u,
                                     -4 * u * u * u - 2 * tau * u};
      });
      break;
    case CaseLabel::C3starPlus: {
      if (tau < 0) break;  // empty side of the lips
      double u0 = std::sqrt(tau / 3.0);
      if (u0 == 0.0) {
        PlanarCurve c;
        c.q12.push_back({0.0, 0.0});
        c.u.push_back(0.0);
        out.push_back(std::move(c));
        break;
      }
      PlanarCurve c;
      c.closed = true;
      auto g = grid(-u0, u0, std::max(nu / 2, 8));
      for (double u : g) {
        double r = std::max(tau - 3 * u * u, 0.0);
        c.q12.push_back({2 * u * u * u, std::sqrt(r)});
        c.u.push_back(u);
      }
      for (auto it = g.rbegin() + 1; it != g.rend(); ++it) {
        double u = *it;
        double r = std::max(tau - 3 * u * u, 0.0);
        c.q12.push_back({2 * u * u * u, -std::sqrt(r)});
        c.u.push_back(u);
      }
      out.push_back(std::move(c));
      break;
    }
    case CaseLabel::C3starMinus: {
      if (tau <= 0) {
        // two branches q2 = +-sqrt(3u^2 - tau) over the whole u range
        for (double sgn : {1.0, -1.0}) {
          PlanarCurve c;
          for (double u : grid(ulo, uhi, nu)) {
            c.q12.push_back({2 * u * u * u, sgn * std::sqrt(3 * u * u - tau)});
            c.u.push_back(u);
          }
          out.push_back(std::move(c));
        }
      } else {
        // reconnected: two pieces joined at q2 = 0, u = +-sqrt(tau/3)
        double u0 = std::sqrt(tau / 3.0);
        for (double side : {1.0, -1.0}) {
          PlanarCurve c;
          double far = side > 0 ? uhi : ulo;
          if (side * far <= u0) continue;
          auto g = grid(u0, side * far, std::max(nu / 2, 8));
          for (auto it = g.rbegin(); it != g.rend(); ++it) {
            double u = side * *it;
            double r = std::max(3 * u * u - tau, 0.0);
            c.q12.push_back({2 * u * u * u, std::sqrt(r)});
            c.u.push_back(u);
          }
          for (auto it = g.begin() + 1; it != g.end(); ++it) {
            double u = side * *it;
            double r = std::max(3 * u * u - tau, 0.0);
            c.q12.push_back({2 * u * u * u, -std::sqrt(r)});
            c.u.push_back(u);
          }
          out.push_back(std::move(c));
        }
      }
      break;
    }
    default:
      throw std::invalid_argument("binodal_from_normal_form: unsupported label");
  }
  return out;
}

std::vector<SweepFrame> sweep_family(const NormalFormSpec& spec_template,
                                     const std::vector<double>& taus, int grid) {
  switch (spec_template.label) {
    case CaseLabel::B4hat:
    case CaseLabel::C3starPlus:
    case CaseLabel::C3starMinus:
    case CaseLabel::C4hat:
    case CaseLabel::C31hat:
    case CaseLabel::F4hat:
      break;
    default:
      throw std::invalid_argument("sweep_family: label has no one-parameter family");
  }
  std::vector<SweepFrame> frames;
  frames.reserve(taus.size());
  for (double tau : taus) {
    NormalFormSpec spec = spec_template;
    spec.tau = tau;
    SweepFrame fr;
    fr.tau = tau;
    fr.patch = criminant_numeric(spec, grid, grid);
    fr.binodal = binodal_from_normal_form(spec, 2 * grid);
    frames.push_back(std::move(fr));
  }
  return frames;
}

}  // namespace binodal::nf

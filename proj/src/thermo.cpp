#include "binodal/thermo.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace binodal::thermo {

namespace {

void check_params(const FluidParams& p) {
  // a = 0 is the no-attraction edge (monotone isotherms, T_c = 0)
  if (!(p.a >= 0 && p.b > 0 && p.R > 0))
    throw std::invalid_argument("FluidParams: require a >= 0, b > 0, R > 0");
}

void check_params(const MixtureParams& m) {
  if (!(m.a1 > 0 && m.a2 > 0 && m.a12 > 0 && m.b1 > 0 && m.b2 > 0 && m.R > 0))
    throw std::invalid_argument("MixtureParams: all parameters must be positive");
}

// Safeguarded Newton within a sign-changing bracket [lo, hi].
double find_root(const std::function<double(double)>& fn,
                 const std::function<double(double)>& dfn, double lo, double hi,
                 double tol = 1e-14) {
  double flo = fn(lo), fhi = fn(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0))
    throw std::runtime_error("find_root: endpoints do not bracket a root");
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double fx = fn(x);
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    double dx = dfn(x);
    double xn = dx != 0 ? x - fx / dx : x;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // bisect when Newton escapes
    if (std::abs(xn - x) <= tol * (1.0 + std::abs(x))) return xn;
    x = xn;
  }
  return x;
}

// Adaptive Simpson quadrature.
double simpson(const std::function<double(double)>& fn, double a, double m, double b,
               double fa, double fm, double fb, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = fn(lm), frm = fn(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(fn, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(fn, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& fn, double a, double b,
                 double tol = 1e-10) {
  double m = 0.5 * (a + b);
  double fa = fn(a), fm = fn(m), fb = fn(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(fn, a, m, b, fa, fm, fb, whole, tol, 48);
}

// Common coexistence scaffolding: spinodal pair and admissible tie-pressure
// window (P must stay positive for the vapour-side intersection to exist).
struct TieWindow {
  SpinodalPair sp;
  double Plo = 0, Phi = 0;
};

TieWindow tie_window(double T, const FluidParams& p) {
  TieWindow w;
  w.sp = spinodal_single(T, p);
  double Pmin = vdw_pressure(w.sp.V_minus, T, p);
  double Pmax = vdw_pressure(w.sp.V_plus, T, p);
  w.Plo = std::max(Pmin, 0.0);
  w.Phi = Pmax;
  if (!(w.Phi > w.Plo))
    throw std::runtime_error("maxwell: empty tie-pressure window");
  return w;
}

// Outermost intersections of P(V) = Ptie: liquid root in (b, V_minus],
// vapour root in [V_plus, inf).
std::array<double, 2> outer_roots(double Ptie, double T, const FluidParams& p,
                                  const SpinodalPair& sp) {
  auto fn = [&](double V) { return vdw_pressure(V, T, p) - Ptie; };
  auto dfn = [&](double V) { return -helmholtz_single_dV(2, V, T, p); };  // P_V = -A_VV
  double lo = p.b * (1.0 + 1e-12);
  while (fn(lo) < 0) lo = p.b + 0.5 * (lo - p.b);  // approach the pole until P > Ptie
  double Vl = find_root(fn, dfn, lo, sp.V_minus);
  double hi = std::max(2.0 * sp.V_plus, sp.V_plus + 1.0);
  while (fn(hi) > 0) hi *= 2.0;
  double Vv = find_root(fn, dfn, sp.V_plus, hi);
  return {Vl, Vv};
}

double equal_area_integral(double Ptie, double Vl, double Vv, double T,
                           const FluidParams& p, double tol) {
  return integrate([&](double V) { return vdw_pressure(V, T, p) - Ptie; }, Vl, Vv, tol);
}

}  // namespace

double vdw_pressure(double V, double T, const FluidParams& p) {
  check_params(p);
  if (!(V > p.b)) throw std::domain_error("vdw_pressure: V must exceed the covolume b");
  return p.R * T / (V - p.b) - p.a / (V * V);
}

double helmholtz_single(double V, double T, const FluidParams& p) {
  check_params(p);
  if (!(V > p.b)) throw std::domain_error("helmholtz_single: V must exceed the covolume b");
  return -p.R * T * std::log(V - p.b) - p.a / V;
}

double helmholtz_single_dV(int n, double V, double T, const FluidParams& p) {
  check_params(p);
  if (!(V > p.b)) throw std::domain_error("helmholtz_single_dV: V must exceed b");
  double w = V - p.b;
  switch (n) {
    case 0: return helmholtz_single(V, T, p);
    case 1: return -p.R * T / w + p.a / (V * V);
    case 2: return p.R * T / (w * w) - 2.0 * p.a / (V * V * V);
    case 3: return -2.0 * p.R * T / (w * w * w) + 6.0 * p.a / (V * V * V * V);
    case 4: return 6.0 * p.R * T / (w * w * w * w) - 24.0 * p.a / (V * V * V * V * V);
    default: throw std::invalid_argument("helmholtz_single_dV: order must be 0..4");
  }
}

Critical critical_point(const FluidParams& p) {
  check_params(p);
  Critical c;
  c.V = 3.0 * p.b;
  c.T = 8.0 * p.a / (27.0 * p.R * p.b);
  c.P = p.a / (27.0 * p.b * p.b);
  return c;
}

SpinodalPair spinodal_single(double T, const FluidParams& p) {
  check_params(p);
  Critical c = critical_point(p);
  if (!(T < c.T)) throw SupercriticalError("spinodal_single: T >= T_c");
  if (!(T > 0)) throw std::domain_error("spinodal_single: T must be positive");
  auto avv = [&](double V) { return helmholtz_single_dV(2, V, T, p); };
  auto avvv = [&](double V) { return helmholtz_single_dV(3, V, T, p); };
  // A_VV -> +inf at V -> b+, negative at V_c, -> 0+ through positive values
  // at large V
  double lo = p.b * (1.0 + 1e-9);
  while (avv(lo) <= 0) lo = p.b + 0.5 * (lo - p.b);
  SpinodalPair sp;
  sp.V_minus = find_root(avv, avvv, lo, c.V);
  double hi = 2.0 * c.V;
  while (avv(hi) <= 0) hi *= 2.0;
  sp.V_plus = find_root(avv, avvv, c.V, hi);
  return sp;
}

CoexistenceResult maxwell_construction(double T, const FluidParams& p, double tol) {
  check_params(p);
  Critical c = critical_point(p);
  if (!(T < c.T)) throw SupercriticalError("maxwell_construction: T >= T_c");
  TieWindow w = tie_window(T, p);

  double P0 = 0.5 * (w.Plo + w.Phi);
  auto [V1, V2] = outer_roots(P0, T, p, w.sp);

  auto A = [&](double V) { return helmholtz_single(V, T, p); };
  auto AV = [&](double V) { return helmholtz_single_dV(1, V, T, p); };
  auto AVV = [&](double V) { return helmholtz_single_dV(2, V, T, p); };

  // Newton on the double-tangent conditions
  double scale = std::abs(A(V2)) + std::abs(A(V1)) + 1.0;
  bool ok = false;
  for (int it = 0; it < 100; ++it) {
    double G1 = AV(V1) - AV(V2);
    double G2 = A(V2) - A(V1) - AV(V1) * (V2 - V1);
    if (std::abs(G1) * (V2 - V1) + std::abs(G2) <= 1e-15 * scale) {
      ok = true;
      break;
    }
    Eigen::Matrix2d J;
    J << AVV(V1), -AVV(V2),
        -AVV(V1) * (V2 - V1), AV(V2) - AV(V1);
    Eigen::Vector2d d = J.fullPivLu().solve(Eigen::Vector2d(-G1, -G2));
    double lam = 1.0;
    for (int bt = 0; bt < 40; ++bt) {
      double n1 = V1 + lam * d[0], n2 = V2 + lam * d[1];
      if (n1 > p.b && n1 < w.sp.V_minus * 1.0000001 && n2 > w.sp.V_plus * 0.9999999) {
        double g1 = AV(n1) - AV(n2);
        double g2 = A(n2) - A(n1) - AV(n1) * (n2 - n1);
        if (std::abs(g1) * (n2 - n1) + std::abs(g2) <
            std::abs(G1) * (V2 - V1) + std::abs(G2)) {
          V1 = n1;
          V2 = n2;
          break;
        }
      }
      lam *= 0.5;
      if (bt == 39) {
        V1 += lam * d[0];
        V2 += lam * d[1];
      }
    }
  }
  if (!ok) throw std::runtime_error("maxwell_construction: Newton did not converge");

  CoexistenceResult r;
  r.V_liq = V1;
  r.V_vap = V2;
  r.P_tie = -AV(V1);
  r.equal_area_residual = equal_area_integral(r.P_tie, V1, V2, T, p, tol);
  return r;
}

CoexistenceResult maxwell_equal_area(double T, const FluidParams& p, double tol) {
  check_params(p);
  Critical c = critical_point(p);
  if (!(T < c.T)) throw SupercriticalError("maxwell_equal_area: T >= T_c");
  TieWindow w = tie_window(T, p);

  // I(P) is strictly decreasing in P (dI/dP = -(V2 - V1)); bisect its sign
  double lo = w.Plo + 1e-12 * (w.Phi - w.Plo), hi = w.Phi - 1e-12 * (w.Phi - w.Plo);
  double Vl = 0, Vv = 0, P = 0, I = 0;
  for (int it = 0; it < 200; ++it) {
    P = 0.5 * (lo + hi);
    auto [V1, V2] = outer_roots(P, T, p, w.sp);
    Vl = V1;
    Vv = V2;
    I = equal_area_integral(P, V1, V2, T, p, tol);
    if (std::abs(I) <= tol || hi - lo <= 1e-16 * (1.0 + P)) break;
    if (I > 0)
      lo = P;
    else
      hi = P;
  }
  CoexistenceResult r;
  r.V_liq = Vl;
  r.V_vap = Vv;
  r.P_tie = P;
  r.equal_area_residual = I;
  return r;
}

double mixture_a(double x, const MixtureParams& m) {
  return m.a1 * x * x + 2.0 * m.a12 * x * (1.0 - x) + m.a2 * (1.0 - x) * (1.0 - x);
}

double mixture_b(double x, const MixtureParams& m) { return m.b1 * x + m.b2 * (1.0 - x); }

double mixture_helmholtz(double V, double x, double T, const MixtureParams& m) {
  check_params(m);
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("mixture_helmholtz: x must lie in [0,1]");
  if (!(V > mixture_b(x, m)))
    throw std::domain_error("mixture_helmholtz: V must exceed the covolume b(x)");
  double entropy = 0.0;  // x ln x + (1-x) ln(1-x), with the 0 log 0 -> 0 limits
  if (x > 0.0) entropy += x * std::log(x);
  if (x < 1.0) entropy += (1.0 - x) * std::log(1.0 - x);
  return -m.R * T * std::log(V - mixture_b(x, m)) - mixture_a(x, m) / V +
         m.R * T * entropy;
}

double mixture_partial(int i, int j, double V, double x, double T,
                       const MixtureParams& m) {
  check_params(m);
  if (i < 0 || j < 0 || i + j > 4)
    throw std::invalid_argument("mixture_partial: order must satisfy 0 <= i+j <= 4");
  if (i + j == 0) return mixture_helmholtz(V, x, T, m);
  if (j > 0 && !(x > 0.0 && x < 1.0))
    throw std::domain_error("mixture_partial: x-derivatives need interior x");
  double w = V - mixture_b(x, m);
  if (!(w > 0)) throw std::domain_error("mixture_partial: V must exceed b(x)");
  double bp = m.b1 - m.b2;  // b'(x); b'' = 0
  // a(x) and derivatives (quadratic)
  double a0 = mixture_a(x, m);
  double a1 = 2.0 * m.a1 * x + 2.0 * m.a12 * (1.0 - 2.0 * x) - 2.0 * m.a2 * (1.0 - x);
  double a2 = 2.0 * m.a1 - 4.0 * m.a12 + 2.0 * m.a2;
  double aj = j == 0 ? a0 : (j == 1 ? a1 : (j == 2 ? a2 : 0.0));

  // -RT ln(w): d^i_V d^j_x = -RT (-1)^(i+j-1) (i+j-1)! (-b')^j / w^(i+j)
  double fact = 1.0;
  for (int t = 1; t < i + j; ++t) fact *= t;
  double sgn = ((i + j - 1) % 2 == 0) ? 1.0 : -1.0;
  double term_log = -m.R * T * sgn * fact * std::pow(-bp, j) / std::pow(w, i + j);

  // -a(x)/V: d^i_V (1/V) = (-1)^i i! / V^(i+1)
  double ifact = 1.0;
  for (int t = 1; t <= i; ++t) ifact *= t;
  double term_att = -aj * ((i % 2 == 0) ? 1.0 : -1.0) * ifact / std::pow(V, i + 1);

  // RT (x ln x + (1-x) ln(1-x)): x-derivatives only
  double term_ent = 0.0;
  if (i == 0 && j >= 1) {
    double y = 1.0 - x;
    switch (j) {
      case 1: term_ent = std::log(x) - std::log(y); break;
      case 2: term_ent = 1.0 / x + 1.0 / y; break;
      case 3: term_ent = -1.0 / (x * x) + 1.0 / (y * y); break;
      case 4: term_ent = 2.0 / (x * x * x) + 2.0 / (y * y * y); break;
      default: break;
    }
    term_ent *= m.R * T;
  }
  return term_log + term_att + term_ent;
}

double mixture_pressure(double V, double x, double T, const MixtureParams& m) {
  check_params(m);
  double w = V - mixture_b(x, m);
  if (!(w > 0)) throw std::domain_error("mixture_pressure: V must exceed b(x)");
  return m.R * T / w - mixture_a(x, m) / (V * V);
}

double mixture_intercept(double V, double x, double T, const MixtureParams& m) {
  return mixture_helmholtz(V, x, T, m) - V * mixture_partial(1, 0, V, x, T, m) -
         x * mixture_partial(0, 1, V, x, T, m);
}

namespace {

// Taylor jet of A about (V0, x0) with the tangent plane removed, over the
// horizontal frame (dV, dx) = E * (c1, c2).
SurfaceJet frame_jet(double V0, double x0, double T, const MixtureParams& m,
                     const std::array<double, 2>& e1, const std::array<double, 2>& e2,
                     double base_offset) {
  double hess = std::abs(mixture_partial(2, 0, V0, x0, T, m)) +
                std::abs(mixture_partial(0, 2, V0, x0, T, m));
  if (!std::isfinite(hess) || hess > 1e12)
    throw std::domain_error("mixture jet: expansion point too close to V = b(x)");
  SurfaceJet raw;
  raw.base_offset = base_offset;
  double fact[5] = {1, 1, 2, 6, 24};
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      if (i + j >= 2) {
        double c = mixture_partial(i, j, V0, x0, T, m) / (fact[i] * fact[j]);
        if (c != 0.0) raw.set(i, j, c);
      }
  // (dV, dx) = c1 * e1 + c2 * e2
  return substitute_linear(raw, e1[0], e2[0], e1[1], e2[1]);
}

struct ContactEqs {
  Eigen::Vector3d G;
  Eigen::Matrix<double, 3, 4> J;
};

// Residuals (equal A_V, equal A_x, equal intercept) and their Jacobian in
// (V1, x1, V2, x2).
ContactEqs contact_eqs(const std::array<double, 2>& p1, const std::array<double, 2>& p2,
                       double T, const MixtureParams& m) {
  auto d = [&](int i, int j, const std::array<double, 2>& p) {
    return mixture_partial(i, j, p[0], p[1], T, m);
  };
  ContactEqs e;
  double AV1 = d(1, 0, p1), Ax1 = d(0, 1, p1), AV2 = d(1, 0, p2), Ax2 = d(0, 1, p2);
  double I1 = mixture_intercept(p1[0], p1[1], T, m);
  double I2 = mixture_intercept(p2[0], p2[1], T, m);
  e.G << AV1 - AV2, Ax1 - Ax2, I1 - I2;
  double AVV1 = d(2, 0, p1), AVx1 = d(1, 1, p1), Axx1 = d(0, 2, p1);
  double AVV2 = d(2, 0, p2), AVx2 = d(1, 1, p2), Axx2 = d(0, 2, p2);
  // dI/dV = -V A_VV - x A_xV ; dI/dx = -V A_Vx - x A_xx
  e.J << AVV1, AVx1, -AVV2, -AVx2,
      AVx1, Axx1, -AVx2, -Axx2,
      -p1[0] * AVV1 - p1[1] * AVx1, -p1[0] * AVx1 - p1[1] * Axx1,
      p2[0] * AVV2 + p2[1] * AVx2, p2[0] * AVx2 + p2[1] * Axx2;
  return e;
}

}  // namespace

std::array<std::array<double, 2>, 2> refine_contact_pair(std::array<double, 2> p1,
                                                         std::array<double, 2> p2, double T,
                                                         const MixtureParams& m,
                                                         double tol) {
  double scale = 1.0 + std::abs(mixture_partial(1, 0, p1[0], p1[1], T, m)) +
                 std::abs(mixture_partial(0, 1, p1[0], p1[1], T, m));
  for (int it = 0; it < 80; ++it) {
    ContactEqs e = contact_eqs(p1, p2, T, m);
    if (e.G.norm() <= tol * scale) return {p1, p2};
    Eigen::Matrix3d JJt = e.J * e.J.transpose();
    Eigen::Vector4d step = e.J.transpose() * JJt.ldlt().solve(-e.G);
    double lam = 1.0;
    for (int bt = 0; bt < 30; ++bt) {
      std::array<double, 2> n1{p1[0] + lam * step[0], p1[1] + lam * step[1]};
      std::array<double, 2> n2{p2[0] + lam * step[2], p2[1] + lam * step[3]};
      bool ok = n1[0] > mixture_b(n1[1], m) && n2[0] > mixture_b(n2[1], m) &&
                n1[1] > 0 && n1[1] < 1 && n2[1] > 0 && n2[1] < 1;
      if (ok && contact_eqs(n1, n2, T, m).G.norm() < e.G.norm()) {
        p1 = n1;
        p2 = n2;
        break;
      }
      lam *= 0.5;
      if (bt == 29) throw std::runtime_error("refine_contact_pair: stalled");
    }
  }
  throw std::runtime_error("refine_contact_pair: did not converge");
}

std::array<double, 2> PairFrame::to_Vx(double c1, double c2, int side) const {
  const std::array<double, 2>& base = side == 0 ? p1 : p2;
  return {base[0] + c1 * e1[0] + c2 * e2[0], base[1] + c1 * e1[1] + c2 * e2[1]};
}

MixtureJets mixture_jet_pair(std::array<double, 2> p1, std::array<double, 2> p2, double T,
                             const MixtureParams& m) {
  check_params(m);
  double dV = p2[0] - p1[0], dx = p2[1] - p1[1];
  if (dV == 0 && dx == 0)
    throw std::invalid_argument("mixture_jet_pair: contact points coincide");
  MixtureJets out;
  out.frame.p1 = p1;
  out.frame.p2 = p2;
  out.frame.e2 = {dV, dx};                 // chord -> unit tie segment
  out.frame.e1 = {-dx, dV};                // transverse horizontal direction
  double AV = mixture_partial(1, 0, p1[0], p1[1], T, m);
  double Ax = mixture_partial(0, 1, p1[0], p1[1], T, m);
  out.frame.e1A = -dx * AV + dV * Ax;
  out.frame.e2A = mixture_helmholtz(p2[0], p2[1], T, m) -
                  mixture_helmholtz(p1[0], p1[1], T, m);
  out.f = frame_jet(p1[0], p1[1], T, m, out.frame.e1, out.frame.e2, 0.0);
  out.g = frame_jet(p2[0], p2[1], T, m, out.frame.e1, out.frame.e2, 1.0);
  return out;
}

SurfaceJet mixture_jet(double V0, double x0, double T, const MixtureParams& m) {
  check_params(m);
  return frame_jet(V0, x0, T, m, {1.0, 0.0}, {0.0, 1.0}, 0.0);
}

MixtureBinodal mixture_binodal(double T, const MixtureParams& m, const SeedBox& box,
                               const TraceOptions& trace) {
  check_params(m);
  SeedBox sb = box;
  double bmax = std::max(m.b1, m.b2);
  if (sb.Vlo <= 0) sb.Vlo = 1.3 * bmax;
  if (sb.Vhi <= 0) sb.Vhi = 30.0 * bmax;

  // coarse search: the pair of well-separated grid points with the smallest
  // common-tangent-plane residual
  int n = sb.grid;
  std::vector<std::array<double, 2>> pts;
  std::vector<std::array<double, 3>> vals;  // (A_V, A_x, intercept)
  pts.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    double V = sb.Vlo + (sb.Vhi - sb.Vlo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      double x = sb.xlo + (sb.xhi - sb.xlo) * j / (n - 1);
      if (V <= mixture_b(x, m) * 1.05) continue;
      pts.push_back({V, x});
      vals.push_back({mixture_partial(1, 0, V, x, T, m),
                      mixture_partial(0, 1, V, x, T, m),
                      mixture_intercept(V, x, T, m)});
    }
  }
  // rank candidate pairs by the common-tangent residual; genuine tie lines
  // join well-separated compositions, so near-coincident pairs are excluded
  struct Cand {
    double r;
    size_t i, j;
  };
  std::vector<Cand> cands;
  double min_dx = 0.3 * (sb.xhi - sb.xlo);
  double wV = 1.0 / (1.0 + std::abs(sb.Vhi));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (std::abs(pts[i][1] - pts[j][1]) < min_dx) continue;
      double r = wV * std::abs(vals[i][0] - vals[j][0]) +
                 std::abs(vals[i][1] - vals[j][1]) +
                 std::abs(vals[i][2] - vals[j][2]);
      cands.push_back({r, i, j});
    }
  if (cands.empty())
    throw std::runtime_error("mixture_binodal: no seed found in the search box");
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.r < b.r;
  });

  std::array<std::array<double, 2>, 2> refined{};
  bool have_pair = false;
  for (size_t k = 0; k < cands.size() && k < 12; ++k) {
    try {
      auto cand = refine_contact_pair(pts[cands[k].i], pts[cands[k].j], T, m);
      if (std::abs(cand[0][1] - cand[1][1]) < 0.05) continue;  // coalesced
      refined = cand;
      have_pair = true;
      break;
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  if (!have_pair)
    throw std::runtime_error(
        "mixture_binodal: no contact pair refined from the search box seeds");

  MixtureJets jets = mixture_jet_pair(refined[0], refined[1], T, m);
  TraceResult tr = trace_binodal(jets.f, jets.g, trace);
  if (tr.curves.empty())
    throw std::runtime_error("mixture_binodal: tracer found no curve at the seed pair");
  const BinodalCurve& curve = tr.curves.front();

  MixtureBinodal out;
  out.s = curve.arclength;
  for (const auto& cp : curve.points) {
    auto q1 = jets.frame.to_Vx(cp.u, cp.v, 0);
    auto q2 = jets.frame.to_Vx(cp.x, cp.y, 1);
    // re-refine against the exact surface: the jets are degree-4 models only
    auto exact = refine_contact_pair(q1, q2, T, m);
    out.side1.push_back(exact[0]);
    out.side2.push_back(exact[1]);
    out.P1.push_back(mixture_pressure(exact[0][0], exact[0][1], T, m));
    out.P2.push_back(mixture_pressure(exact[1][0], exact[1][1], T, m));
    double dmu = std::abs(mixture_partial(0, 1, exact[0][0], exact[0][1], T, m) -
                          mixture_partial(0, 1, exact[1][0], exact[1][1], T, m));
    double dI = std::abs(mixture_intercept(exact[0][0], exact[0][1], T, m) -
                         mixture_intercept(exact[1][0], exact[1][1], T, m));
    out.mu_resid.push_back(std::max(dmu, dI));
  }
  return out;
}

}  // namespace binodal::thermo

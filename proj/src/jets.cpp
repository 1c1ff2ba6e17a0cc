#include "binodal/jets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace binodal {

namespace {

void check_index(int i, int j) {
  if (i < 0 || j < 0 || i + j < 2 || i + j > 4)
    throw std::invalid_argument("SurfaceJet: index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside degrees 2..4");
}

double falling(int n, int k) {
  double r = 1.0;
  for (int t = 0; t < k; ++t) r *= n - t;
  return r;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int t = 0; t < n; ++t) r *= x;
  return r;
}

}  // namespace

SurfaceJet::SurfaceJet(std::initializer_list<std::pair<IJ, double>> terms, double offset)
    : base_offset(offset) {
  for (const auto& [ij, c] : terms) set(ij.first, ij.second, c);
}

double SurfaceJet::coeff(int i, int j) const {
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? 0.0 : it->second;
}

void SurfaceJet::set(int i, int j, double c) {
  check_index(i, j);
  if (!std::isfinite(c)) throw std::invalid_argument("SurfaceJet: non-finite coefficient");
  coeffs[{i, j}] = c;
}

double SurfaceJet::scale() const {
  double m = 0.0;
  for (const auto& [ij, c] : coeffs) m = std::max(m, std::abs(c));
  return 1.0 + m;
}

double FamilyJet::coeff(int i, int j, int k) const {
  const std::map<IJ, double>* blk = nullptr;
  switch (k) {
    case 0: return base.coeff(i, j);
    case 1: blk = &tau1; break;
    case 2: blk = &tau2; break;
    default: throw std::invalid_argument("FamilyJet: tau order must be 0, 1 or 2");
  }
  auto it = blk->find({i, j});
  return it == blk->end() ? 0.0 : it->second;
}

double FamilyJet::evaluate(double u, double v, double tau) const {
  double r = binodal::evaluate(base, u, v);
  for (const auto& [ij, c] : tau1) r += tau * c * ipow(u, ij.first) * ipow(v, ij.second);
  for (const auto& [ij, c] : tau2) r += tau * tau * c * ipow(u, ij.first) * ipow(v, ij.second);
  return r;
}

Direction2::Direction2(double a, double b) : d1(a), d2(b) {
  if (std::hypot(a, b) == 0.0)
    throw std::invalid_argument("Direction2: zero direction");
}

Direction2 Direction2::normalized() const {
  double n = std::hypot(d1, d2);
  return Direction2(d1 / n, d2 / n);
}

double Direction2::angle_to(const Direction2& other) const {
  Direction2 p = normalized(), q = other.normalized();
  double cross = std::abs(p.d1 * q.d2 - p.d2 * q.d1);
  double dot = std::abs(p.d1 * q.d1 + p.d2 * q.d2);
  return std::atan2(std::min(cross, 1.0), dot);
}

double evaluate(const SurfaceJet& jet, double u, double v) {
  double r = 0.0;
  for (const auto& [ij, c] : jet.coeffs) r += c * ipow(u, ij.first) * ipow(v, ij.second);
  return r;
}

double partial(const SurfaceJet& jet, int du, int dv, double u, double v) {
  if (du < 0 || dv < 0) throw std::invalid_argument("partial: negative derivative order");
  if (du + dv > 4) throw std::invalid_argument("partial: order exceeds jet degree 4");
  double r = 0.0;
  for (const auto& [ij, c] : jet.coeffs) {
    const auto [i, j] = ij;
    if (i < du || j < dv) continue;
    r += c * falling(i, du) * falling(j, dv) * ipow(u, i - du) * ipow(v, j - dv);
  }
  return r;
}

double discriminant(const SurfaceJet& jet) {
  double f20 = jet.coeff(2, 0), f11 = jet.coeff(1, 1), f02 = jet.coeff(0, 2);
  return f11 * f11 - 4.0 * f20 * f02;
}

std::vector<Direction2> asymptotic_directions(const SurfaceJet& jet, double tol) {
  double f20 = jet.coeff(2, 0), f11 = jet.coeff(1, 1), f02 = jet.coeff(0, 2);
  double band = tol * jet.scale();
  if (std::abs(f20) <= band && std::abs(f11) <= band && std::abs(f02) <= band)
    throw std::domain_error("asymptotic_directions: flat umbilic (zero quadratic form)");

  double disc = discriminant(jet);
  if (disc < -band) return {};
  if (std::abs(disc) <= band) {
    // parabolic: kernel of the (degenerate) Hessian; pick the larger of the
    // two candidate kernel rows for stability
    Direction2 d = std::hypot(2.0 * f02, f11) >= std::hypot(f11, 2.0 * f20)
                       ? Direction2(2.0 * f02, -f11)
                       : Direction2(-f11, 2.0 * f20);
    return {d.normalized()};
  }
  // hyperbolic: roots of f20 t^2 + f11 t + f02 = 0 along (t, 1); handle a
  // vanishing leading coefficient (root at infinity = direction (1,0))
  std::vector<Direction2> out;
  if (std::abs(f20) <= band) {
    out.emplace_back(1.0, 0.0);
    if (std::abs(f11) > band) out.push_back(Direction2(-f02 / f11, 1.0).normalized());
    return out;
  }
  double sd = std::sqrt(disc);
  double q = -0.5 * (f11 + std::copysign(sd, f11));
  double t1 = q / f20;
  double t2 = (std::abs(q) > band) ? f02 / q : -f11 / f20 - t1;
  out.push_back(Direction2(t1, 1.0).normalized());
  out.push_back(Direction2(t2, 1.0).normalized());
  return out;
}

SquaredForm parabolic_form(const SurfaceJet& jet, double tol) {
  double f20 = jet.coeff(2, 0), f02 = jet.coeff(0, 2);
  double band = tol * jet.scale();
  if (std::abs(discriminant(jet)) > band)
    throw std::domain_error("parabolic_form: jet is not parabolic");
  double tr = f20 + f02;
  if (std::abs(tr) <= band)
    throw std::domain_error("parabolic_form: zero quadratic form");
  SquaredForm sf;
  sf.sigma = tr > 0 ? 1.0 : -1.0;
  auto dirs = asymptotic_directions(jet, tol);
  Direction2 d = dirs.front();
  // (a,b) ~ (d2, -d1), scaled so that (a u + b v)^2 = sigma * quadratic
  double ah = d.d2, bh = -d.d1;
  double lam = std::sqrt(sf.sigma * tr / (ah * ah + bh * bh));
  sf.a = lam * ah;
  sf.b = lam * bh;
  if (sf.b < 0 || (sf.b == 0 && sf.a < 0)) {
    sf.a = -sf.a;
    sf.b = -sf.b;
  }
  return sf;
}

CuspOfGauss is_cusp_of_gauss(const SurfaceJet& jet, double tol) {
  SquaredForm sf = parabolic_form(jet, tol);
  double c30 = sf.sigma * jet.coeff(3, 0), c21 = sf.sigma * jet.coeff(2, 1);
  double c12 = sf.sigma * jet.coeff(1, 2), c03 = sf.sigma * jet.coeff(0, 3);
  const double a = sf.a, b = sf.b;
  double margin = a * a * a * c03 - a * a * b * c12 + a * b * b * c21 - b * b * b * c30;
  return {std::abs(margin) <= tol * jet.scale(), margin};
}

bool is_flecnodal_along_tie(const SurfaceJet& jet, double tol) {
  double band = tol * jet.scale();
  return std::abs(jet.coeff(0, 2)) <= band && std::abs(jet.coeff(0, 3)) <= band;
}

SurfaceJet substitute_linear(const SurfaceJet& jet,
                             double m00, double m01, double m10, double m11) {
  if (std::abs(m00 * m11 - m01 * m10) == 0.0)
    throw std::invalid_argument("substitute_linear: singular substitution");
  // dense accumulation over degrees 0..4 (sub-quadratic slots stay zero for
  // a linear substitution of a degree 2..4 jet)
  std::array<std::array<double, 5>, 5> acc{};
  for (const auto& [ij, c] : jet.coeffs) {
    const auto [i, j] = ij;
    // (m00 u + m01 v)^i expanded as binomials, likewise for the second factor
    std::array<double, 5> pu{}, pv{};
    for (int k = 0; k <= i; ++k) {
      double binom = 1.0;
      for (int t = 0; t < k; ++t) binom = binom * (i - t) / (t + 1);
      pu[k] = binom * ipow(m00, i - k) * ipow(m01, k);  // coefficient of u^(i-k) v^k
    }
    for (int k = 0; k <= j; ++k) {
      double binom = 1.0;
      for (int t = 0; t < k; ++t) binom = binom * (j - t) / (t + 1);
      pv[k] = binom * ipow(m10, j - k) * ipow(m11, k);
    }
    for (int k1 = 0; k1 <= i; ++k1)
      for (int k2 = 0; k2 <= j; ++k2)
        acc[i + j - k1 - k2][k1 + k2] += c * pu[k1] * pv[k2];
  }
  SurfaceJet out;
  out.base_offset = jet.base_offset;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j + i <= 4; ++j)
      if (i + j >= 2 && acc[i][j] != 0.0) out.set(i, j, acc[i][j]);
  return out;
}

SurfaceJet scale_jet(const SurfaceJet& jet, double lambda) {
  SurfaceJet out;
  out.base_offset = jet.base_offset;
  for (const auto& [ij, c] : jet.coeffs) out.coeffs[ij] = lambda * c;
  return out;
}

}  // namespace binodal

// Shared helpers for the test suites: deterministic RNG, random jet
// builders stratified by case, polyline distances and small fitting
// utilities. Everything lives in test code only.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "binodal/bitangent.hpp"
#include "binodal/jets.hpp"

namespace testsupport {

using binodal::IJ;
using binodal::SurfaceJet;

inline std::mt19937_64 make_rng(unsigned seed = 20240811u) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double away_from_zero(std::mt19937_64& rng, double lo, double hi) {
  double v = uniform(rng, lo, hi);
  return (rng() & 1) ? v : -v;
}

inline void add_random_terms(SurfaceJet& j, std::mt19937_64& rng, int degree, double mag) {
  for (int i = 0; i <= degree; ++i) {
    int k = degree - i;
    j.set(i, k, uniform(rng, -mag, mag));
  }
}

// Non-parabolic quadratic with |discriminant| bounded away from zero.
inline SurfaceJet random_nonparabolic(std::mt19937_64& rng, double offset,
                                      double cubic_mag = 0.3, double quartic_mag = 0.1,
                                      double disc_min = 0.4) {
  for (;;) {
    SurfaceJet j;
    j.base_offset = offset;
    j.set(2, 0, uniform(rng, -1.2, 1.2));
    j.set(1, 1, uniform(rng, -1.2, 1.2));
    j.set(0, 2, uniform(rng, -1.2, 1.2));
    if (std::abs(binodal::discriminant(j)) < disc_min) continue;
    if (cubic_mag > 0) add_random_terms(j, rng, 3, cubic_mag);
    if (quartic_mag > 0) add_random_terms(j, rng, 4, quartic_mag);
    return j;
  }
}

// Parabolic jet lambda*(a u + v)^2 + cubic + quartic with the cubic bounded
// away from zero on the asymptotic direction (no cusp of Gauss) and c02
// bounded away from zero (asymptotic direction off the tie line).
inline SurfaceJet random_parabolic_noncusp(std::mt19937_64& rng, double offset,
                                           double cubic_mag = 0.8,
                                           double quartic_mag = 0.1) {
  for (;;) {
    double a = uniform(rng, -1.0, 1.0);
    double lam = away_from_zero(rng, 0.5, 1.5);
    SurfaceJet j;
    j.base_offset = offset;
    if (a != 0.0) j.set(2, 0, lam * a * a);
    j.set(1, 1, 2.0 * lam * a);
    j.set(0, 2, lam);
    add_random_terms(j, rng, 3, cubic_mag);
    // cubic evaluated on the asymptotic direction (1, -a)
    double cub = j.coeff(3, 0) - j.coeff(2, 1) * a + j.coeff(1, 2) * a * a -
                 j.coeff(0, 3) * a * a * a;
    if (std::abs(cub) < 0.2) continue;
    if (quartic_mag > 0) add_random_terms(j, rng, 4, quartic_mag);
    return j;
  }
}

inline double dist_point_segment(const std::array<double, 4>& p,
                                 const std::array<double, 4>& a,
                                 const std::array<double, 4>& b) {
  double ab2 = 0, ap_ab = 0;
  for (int k = 0; k < 4; ++k) {
    double d = b[k] - a[k];
    ab2 += d * d;
    ap_ab += (p[k] - a[k]) * d;
  }
  double t = ab2 > 0 ? std::clamp(ap_ab / ab2, 0.0, 1.0) : 0.0;
  double d2 = 0;
  for (int k = 0; k < 4; ++k) {
    double d = p[k] - (a[k] + t * (b[k] - a[k]));
    d2 += d * d;
  }
  return std::sqrt(d2);
}

inline std::array<double, 4> as4(const binodal::ContactPair& p) {
  return {p.u, p.v, p.x, p.y};
}

inline double dist_to_polyline(const std::array<double, 4>& p,
                               const std::vector<binodal::ContactPair>& poly) {
  double best = std::numeric_limits<double>::infinity();
  if (poly.size() == 1) {
    return dist_point_segment(p, as4(poly[0]), as4(poly[0]));
  }
  for (size_t i = 0; i + 1 < poly.size(); ++i)
    best = std::min(best, dist_point_segment(p, as4(poly[i]), as4(poly[i + 1])));
  return best;
}

// Angle between lines spanned by two planar directions, in [0, pi/2].
inline double line_angle(std::array<double, 2> a, std::array<double, 2> b) {
  double na = std::hypot(a[0], a[1]), nb = std::hypot(b[0], b[1]);
  double cross = std::abs(a[0] * b[1] - a[1] * b[0]) / (na * nb);
  double dot = std::abs(a[0] * b[0] + a[1] * b[1]) / (na * nb);
  return std::atan2(std::min(cross, 1.0), dot);
}

// Least-squares fit of y ~ sum c_k x^(k+k0) for k = 0..nterms-1.
inline std::vector<double> polyfit_powers(const std::vector<double>& xs,
                                          const std::vector<double>& ys, int k0,
                                          int nterms) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<double>> M(nterms, std::vector<double>(nterms, 0.0));
  std::vector<double> rhs(nterms, 0.0);
  for (int s = 0; s < n; ++s) {
    std::vector<double> pw(nterms);
    double base = std::pow(xs[s], k0);
    for (int k = 0; k < nterms; ++k) {
      pw[k] = base;
      base *= xs[s];
    }
    for (int i = 0; i < nterms; ++i) {
      rhs[i] += pw[i] * ys[s];
      for (int j = 0; j < nterms; ++j) M[i][j] += pw[i] * pw[j];
    }
  }
  // gaussian elimination with partial pivoting
  std::vector<double> c(nterms, 0.0);
  for (int col = 0; col < nterms; ++col) {
    int piv = col;
    for (int r = col + 1; r < nterms; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < nterms; ++r) {
      double f = M[r][col] / M[col][col];
      for (int cc = col; cc < nterms; ++cc) M[r][cc] -= f * M[col][cc];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = nterms - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int cc = r + 1; cc < nterms; ++cc) s -= M[r][cc] * c[cc];
    c[r] = s / M[r][r];
  }
  return c;
}

}  // namespace testsupport

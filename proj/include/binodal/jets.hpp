#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace binodal {

/// Default relative tolerance for all "~= 0" predicates. A quantity X is
/// treated as zero iff |X| <= tol * (1 + max|coefficient|).
inline constexpr double kTol = 1e-9;

using IJ = std::pair<int, int>;

/// Truncated Taylor jet of one surface patch height function z = f(u,v),
/// degrees 2..4, expanded about the base point with zero 1-jet. Coefficients
/// are stored sparsely; absent index pairs are zero. base_offset is the
/// second ambient coordinate of the base point (0 for the M patch, 1 for N).
struct SurfaceJet {
  std::map<IJ, double> coeffs;
  double base_offset = 0.0;

  SurfaceJet() = default;
  SurfaceJet(std::initializer_list<std::pair<IJ, double>> terms, double offset = 0.0);

  double coeff(int i, int j) const;
  void set(int i, int j, double c);  // throws unless 2 <= i+j <= 4
  /// 1 + max|coefficient|; the scale used by relative-tolerance predicates.
  double scale() const;
};

/// One-parameter family of patches: base at tau = 0 plus tau-linear and
/// tau-quadratic coefficient blocks (those may carry degree >= 1 terms).
struct FamilyJet {
  SurfaceJet base;
  std::map<IJ, double> tau1, tau2;

  double coeff(int i, int j, int k) const;  // k = 0,1,2
  double evaluate(double u, double v, double tau) const;
};

/// Nonzero tangent direction in a patch parameter plane, treated
/// projectively (scalar multiples identify).
struct Direction2 {
  double d1 = 0.0, d2 = 0.0;

  Direction2() = default;
  Direction2(double a, double b);  // throws if both ~ 0
  Direction2 normalized() const;
  /// Angle between the underlying lines, in [0, pi/2].
  double angle_to(const Direction2& other) const;
};

double evaluate(const SurfaceJet& jet, double u, double v);

/// Exact partial derivative d^(du+dv) f / du^du dv^dv at (u,v).
/// Throws std::invalid_argument if du + dv exceeds the jet degree 4.
double partial(const SurfaceJet& jet, int du, int dv, double u, double v);

/// f11^2 - 4 f20 f02 of the degree-2 part: > 0 hyperbolic, < 0 elliptic,
/// ~= 0 parabolic.
double discriminant(const SurfaceJet& jet);

/// Kernel directions of the second fundamental form at the base point:
/// 2 when hyperbolic, 1 when parabolic (within tolerance), 0 when elliptic.
/// Throws std::domain_error on a flat umbilic (zero quadratic form).
std::vector<Direction2> asymptotic_directions(const SurfaceJet& jet, double tol = kTol);

/// The quadratic form written as sigma * (a u + b v)^2 for a parabolic jet,
/// with sigma = +-1 and the representative normalized to b >= 0 (a > 0 when
/// b ~= 0). Throws std::domain_error if the jet is not parabolic.
struct SquaredForm {
  double a = 0.0, b = 0.0;
  double sigma = 1.0;
};
SquaredForm parabolic_form(const SurfaceJet& jet, double tol = kTol);

/// Cusp-of-Gauss test for a parabolic jet: true iff the cubic part vanishes
/// on the asymptotic direction. margin is the invariant
/// a^3 c03 - a^2 b c12 + a b^2 c21 - b^3 c30 evaluated on sigma * jet with
/// (a,b) from parabolic_form. Throws std::domain_error on non-parabolic input.
struct CuspOfGauss {
  bool is_cusp = false;
  double margin = 0.0;
};
CuspOfGauss is_cusp_of_gauss(const SurfaceJet& jet, double tol = kTol);

/// True iff the tie-line direction (0,1) is asymptotic with >= 4-point
/// contact: c02 ~= 0 and c03 ~= 0.
bool is_flecnodal_along_tie(const SurfaceJet& jet, double tol = kTol);

/// Jet of f composed with the linear substitution
/// (u,v) -> (m00 u + m01 v, m10 u + m11 v). Exact; degree is preserved.
SurfaceJet substitute_linear(const SurfaceJet& jet,
                             double m00, double m01, double m10, double m11);

/// Jet of lambda * f.
SurfaceJet scale_jet(const SurfaceJet& jet, double lambda);

}  // namespace binodal

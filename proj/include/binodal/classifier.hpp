#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binodal/jets.hpp"

namespace binodal {

/// The eleven singularity cases of a bitangent pair (ThreeE is Case 3e,
/// the C3* configuration with the roles of M and N swapped), plus the
/// dead-band outcome Unclassified.
enum class CaseLabel {
  B2hat,
  B3hat,
  B4hat,
  B3starstar,
  C3hat,
  C3starPlus,
  C3starMinus,
  C4hat,
  C31hat,
  F4hat,
  ThreeE,
  Unclassified,
};

std::string_view to_string(CaseLabel label);
/// Accepts both short ("C3", "B3starstar") and full ("C3hat") spellings.
CaseLabel label_from_string(std::string_view name);

/// One tested genericity condition. For a nonzero-required condition the
/// margin is |value| - tol*scale; for a zero-required one it is
/// tol*scale - |value|. Positive margin means satisfied.
struct Condition {
  std::string name;
  double value = 0.0;
  bool require_zero = false;
  bool satisfied = false;
  double margin = 0.0;
};

struct CaseReport {
  CaseLabel label = CaseLabel::Unclassified;
  std::vector<Condition> conditions;
  std::optional<double> c3;
  std::optional<int> beaks_sign;  // +1 two real branches, -1 isolated
  std::string normal_form;        // matched form with the derivable signs resolved
};

/// Deterministic decision tree over the case conditions, evaluated with the
/// declared relative tolerance. Every tested condition is recorded.
/// Precondition: both jets in the normalized frame (common tangent plane
/// z = 0, base points (0,0,0) and (0,1,0)).
CaseReport classify(const SurfaceJet& f, const SurfaceJet& g, double tol = kTol);

/// Family overload: additionally checks the tau-genericity of the matched
/// family case (B4hat: g021 != 0; C3star/ThreeE: the rate at which the family
/// breaks the degenerate surface's parabolicity) and appends those conditions.
CaseReport classify(const FamilyJet& f, const FamilyJet& g, double tol = kTol);

/// The lips/beaks decision quantity
///   c3 = -(f30 - f21 f11/2f02 + f12 f11^2/4f02^2 - f03 f11^3/8f02^3)
///        *(g30 - g21 g11/2g02 + g12 g11^2/4g02^2 - g03 g11^3/8g02^3).
/// c3 > 0: lips (isolated point), c3 < 0: beaks (two real branches).
/// Throws std::domain_error when f02 or g02 is inside the zero band.
double c3(const SurfaceJet& f, const SurfaceJet& g, double tol = kTol);

/// Sign of (f30-f21 a+f12 a^2-f03 a^3)(g30-g21 c+g12 c^2-g03 c^3) with
/// a = f11/2f02, c = g11/2g02: +1 two real branches, -1 isolated point,
/// 0 inside the dead band. Always satisfies sign = -sign(c3).
int beaks_criterion(const SurfaceJet& f, const SurfaceJet& g, double tol = kTol);

/// Leading cusp invariant of the binodal curve on M when N is parabolic with
/// quadratic (a x + b y)^2, b != 0, and M is not parabolic:
///   6 K^2 / (b^6 (f11^2 - 4 f20 f02)),  K = a^3 g03 - a^2 b g12 + a b^2 g21 - b^3 g30.
/// Writing the M-curve as u = p x^2 + q x^3, v = r x^2 + s x^3 this equals
/// ps - qr; nonzero certifies the ordinary cusp. Throws std::domain_error
/// when b ~= 0 or M is parabolic.
double cusp_invariant(const SurfaceJet& f, const SurfaceJet& g, double tol = kTol);

/// Leading x^2 coefficients of the local, bilocal and parabolic curves at a
/// nondegenerate cusp of Gauss in the frame z = y^2 + f21 x^2 y + ...:
///   (-2 f40/f21, -f21/2, -6 f40/f21).
/// Throws std::domain_error when f21 ~= 0 or f21^2 ~= 4 f40, and
/// std::invalid_argument when the jet is not in that frame.
std::array<double, 3> gauss_cusp_curves(const SurfaceJet& f, double tol = kTol);

/// Substitution taking a parabolic jet with c02 != 0 to the cusp-of-Gauss
/// frame: X along the asymptotic direction, quadratic part exactly Y^2
/// (the jet is sign-flipped first when its quadratic is negative
/// semidefinite). Feeds gauss_cusp_curves and the C4hat nondegeneracy check.
SurfaceJet to_gauss_cusp_frame(const SurfaceJet& f, double tol = kTol);

}  // namespace binodal

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "binodal/classifier.hpp"

namespace binodal::nf {

/// Which generating-family normal form to evaluate, with the resolved +-
/// slots and the family parameter. sign fields are consulted only where the
/// matched form has the corresponding slot; for C3starPlus/C3starMinus the
/// q2^2 sign is fixed by the label. The tau axis is oriented so that the
/// C3star+ lips opens as tau increases.
struct NormalFormSpec {
  CaseLabel label = CaseLabel::C3hat;
  int sign_eps2 = +1;
  int sign_v2 = +1;
  int sign_q2sq = +1;
  double tau = 0.0;
};

/// Literal value of the matched generating function F(u, v, eps, q).
/// Throws std::domain_error for B3starstar (functional modulus unspecified)
/// and std::invalid_argument for labels without a listed form.
double generating_value(const NormalFormSpec& spec, double u, double v, double eps,
                        double q1, double q2, double q3);

/// F together with its partials in u, v and eps (the criminant's defining
/// equations).
struct GeneratingDerivs {
  double F = 0, Fu = 0, Fv = 0, Feps = 0;
};
GeneratingDerivs generating_derivs(const NormalFormSpec& spec, double u, double v,
                                   double eps, double q1, double q2, double q3);

/// Closed-form C3 criminant parametrization
///   (q1,q2,q3) = (2u^3 - eps*u - 2*eps, -3u^2 - eps, -eps^2*u - eps^2),
/// a folded Whitney umbrella.
std::array<double, 3> criminant_closed_form_C3(double u, double eps);

struct CriminantSample {
  double u = 0, eps = 0;       // patch parameters (u doubles as the free q2
                               // parameter for the B family)
  double u_crit = 0;           // u of the underlying critical point (0 for
                               // the B family, = u otherwise)
  std::array<double, 3> q{};
  bool valid = false;
};

/// Criminant patch of one normal form over a parameter grid, v = 0 forced.
/// For the B family F_u = 0 forces u = 0 instead and the grid's u axis is
/// reused as the free q2 parameter; the elimination order is documented in
/// elimination_note. C3star solves a quadratic for q2 and emits two sheets,
/// skipping grid points with a negative radicand. The redundant component is
/// always the plane q3 = 0 (redundant_extent gives its drawing window).
struct CriminantPatch {
  NormalFormSpec spec;
  int nu = 0, ne = 0, sheets = 1;
  std::vector<CriminantSample> samples;  // sheet*(nu*ne) + iu*ne + ie
  int skipped = 0;
  std::string elimination_note;
  std::array<double, 2> redundant_extent{-0.5, 0.5};
};

CriminantPatch criminant_numeric(const NormalFormSpec& spec, int nu = 200, int ne = 200,
                                 double ulo = -0.5, double uhi = 0.5, double elo = -0.5,
                                 double ehi = 0.5);

/// One branch of the eps -> 0 binodal slice, a polyline in the plane q3 = 0.
struct PlanarCurve {
  std::vector<std::array<double, 2>> q12;
  std::vector<double> u;
  bool closed = false;
};

/// eps -> 0 limit of the criminant: the binodal curve(s) along which the
/// criminant is tangent to the redundant plane. May be empty (C3star+ on the
/// empty side of the lips transition).
std::vector<PlanarCurve> binodal_from_normal_form(const NormalFormSpec& spec, int nu = 400,
                                                  double ulo = -0.5, double uhi = 0.5);

struct SweepFrame {
  double tau = 0;
  CriminantPatch patch;
  std::vector<PlanarCurve> binodal;
};

/// One frame per tau value. Only the family labels
/// {B4hat, C3starPlus, C3starMinus, C4hat, C31hat, F4hat} sweep.
std::vector<SweepFrame> sweep_family(const NormalFormSpec& spec_template,
                                     const std::vector<double>& taus, int grid = 200);

}  // namespace binodal::nf

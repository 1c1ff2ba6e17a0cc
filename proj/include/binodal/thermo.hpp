#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "binodal/bitangent.hpp"
#include "binodal/jets.hpp"

namespace binodal::thermo {

/// Thrown for temperatures at or above the critical temperature, where no
/// coexistence construction exists (a legal outcome, not an input error).
struct SupercriticalError : std::domain_error {
  using std::domain_error::domain_error;
};

struct FluidParams {
  double a = 3.0, b = 1.0 / 3.0, R = 8.0 / 3.0;  // reduced van der Waals defaults
  // a >= 0 (a = 0 gives the no-attraction edge), b > 0, R > 0
};

struct MixtureParams {
  double a1 = 1.0, a2 = 1.0, a12 = 0.25;
  double b1 = 0.1, b2 = 0.1;
  double R = 1.0;
};

/// P = RT/(V-b) - a/V^2. Throws std::domain_error for V <= b.
double vdw_pressure(double V, double T, const FluidParams& p);

/// A = -RT ln(V-b) - a/V, so that A_V = -P identically.
double helmholtz_single(double V, double T, const FluidParams& p);

/// n-th V-derivative of helmholtz_single, n = 0..4.
double helmholtz_single_dV(int n, double V, double T, const FluidParams& p);

struct Critical {
  double T = 0, V = 0, P = 0;
};
/// Simultaneous root of A_VV = 0 and A_VVV = 0: (8a/27Rb, 3b, a/27b^2).
Critical critical_point(const FluidParams& p);

struct SpinodalPair {
  double V_minus = 0, V_plus = 0;
};
/// The two roots of A_VV = 0 bracketing V_c; P_V > 0 between them.
SpinodalPair spinodal_single(double T, const FluidParams& p);

struct CoexistenceResult {
  double V_liq = 0, V_vap = 0;
  double P_tie = 0;
  double equal_area_residual = 0;  // adaptive-Simpson integral of P(V) - P_tie
};

/// Double-tangent construction: Newton on
///   A_V(V1) = A_V(V2),  A(V2) - A(V1) = A_V(V1) (V2 - V1),
/// seeded from the spinodal pressure window. The reported residual is the
/// independently quadratured Maxwell equal-area integral.
CoexistenceResult maxwell_construction(double T, const FluidParams& p, double tol = 1e-10);

/// Independent second construction: bisection on P_tie of the equal-area
/// integral, using only P(V) (no Helmholtz values).
CoexistenceResult maxwell_equal_area(double T, const FluidParams& p, double tol = 1e-10);

double mixture_a(double x, const MixtureParams& m);
double mixture_b(double x, const MixtureParams& m);

/// A(V,x) = -RT ln(V-b(x)) - a(x)/V + RT (x ln x + (1-x) ln(1-x)),
/// with the one-fluid mixing rule a(x) = a1 x^2 + 2 a12 x(1-x) + a2 (1-x)^2,
/// b(x) = b1 x + b2 (1-x). Valid for 0 <= x <= 1 (entropy term -> 0 at the
/// endpoints) and V > b(x).
double mixture_helmholtz(double V, double x, double T, const MixtureParams& m);

/// Exact mixed partial d^(i+j) A / dV^i dx^j, i + j <= 4, interior x only
/// when j >= 1.
double mixture_partial(int i, int j, double V, double x, double T, const MixtureParams& m);

double mixture_pressure(double V, double x, double T, const MixtureParams& m);

/// Tangent-plane intercept A - V A_V - x A_x (equal at the two contact
/// points of a bitangent plane, together with A_V and A_x).
double mixture_intercept(double V, double x, double T, const MixtureParams& m);

/// Degree-4 Taylor jet of A about (V0,x0) over its own tangent plane, in the
/// identity horizontal frame (u,v) = (V-V0, x-x0). The returned jet has zero
/// constant and linear parts by construction.
SurfaceJet mixture_jet(double V0, double x0, double T, const MixtureParams& m);

/// Affine frame adapted to a contact pair: origin at p1, the chord p1->p2
/// mapped to the unit tie segment, heights measured along the A-axis.
struct PairFrame {
  std::array<double, 2> p1{}, p2{};      // (V,x) of the two contact points
  std::array<double, 2> e1{}, e2{};      // horizontal parts of the frame axes
  double e1A = 0, e2A = 0;               // A-components of the frame axes
  /// Map frame coordinates to (V,x): base point index 0 = M side, 1 = N side.
  std::array<double, 2> to_Vx(double c1, double c2, int side) const;
};

struct MixtureJets {
  SurfaceJet f, g;
  PairFrame frame;
};

/// Newton refinement of an approximate contact pair onto the exact
/// common-tangent-plane conditions (equal A_V, equal A_x, equal intercept).
/// Throws std::runtime_error on non-convergence.
std::array<std::array<double, 2>, 2> refine_contact_pair(std::array<double, 2> p1,
                                                         std::array<double, 2> p2, double T,
                                                         const MixtureParams& m,
                                                         double tol = 1e-12);

/// Jets of the isothermal surface about an exact contact pair, in the paper
/// frame (common tangent plane -> z = 0, chord -> unit tie segment).
MixtureJets mixture_jet_pair(std::array<double, 2> p1, std::array<double, 2> p2, double T,
                             const MixtureParams& m);

struct MixtureBinodal {
  std::vector<double> s;                        // arclength of the traced curve
  std::vector<std::array<double, 2>> side1, side2;  // (V,x) contact pairs
  std::vector<double> P1, P2;                   // pressures at the two sides
  std::vector<double> mu_resid;                 // max of |dA_x| and |d intercept|
};

struct SeedBox {
  double Vlo = 0, Vhi = 0;  // 0,0 = derive from covolumes
  double xlo = 0.02, xhi = 0.98;
  int grid = 48;
};

/// Coarse-search (or use the supplied seed), refine to an exact contact
/// pair, trace the binodal through the jet pipeline in the pair frame, map
/// back to (V,x) and re-refine every point against the exact surface.
/// Throws std::runtime_error when no seed is found in the box.
MixtureBinodal mixture_binodal(double T, const MixtureParams& m, const SeedBox& box = {},
                               const TraceOptions& trace = {.step = 5e-3,
                                                            .max_steps = 2000,
                                                            .domain_bound = 0.45,
                                                            .tol = 1e-12});

}  // namespace binodal::thermo

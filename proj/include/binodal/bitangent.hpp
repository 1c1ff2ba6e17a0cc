#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "binodal/jets.hpp"

namespace binodal {

/// One point of the bitangency variety H^{-1}(0): (u,v) on patch M,
/// (x,y) on patch N.
struct ContactPair {
  double u = 0.0, v = 0.0, x = 0.0, y = 0.0;
};

enum class Side { M, N };

/// Traced connected piece of the bitangency variety, ordered along the
/// curve, with 4-space arclength and per-point residual ||H||.
struct BinodalCurve {
  std::vector<ContactPair> points;
  std::vector<double> arclength;
  std::vector<double> residual;
  std::vector<int> cusp_indices_M, cusp_indices_N;
  bool truncated_front = false;  // corrector diverged tracing backwards
  bool truncated_back = false;   // corrector diverged tracing forwards
};

/// Ruled surface swept by the tie lines of a traced curve.
struct TieLineMesh {
  std::vector<std::array<double, 3>> vertices;  // 2 per rule
  std::vector<std::array<int, 4>> faces;        // quads, 0-based
  double extension = 0.0;
};

/// The map H of the bitangency system:
///   H1 = f_u - g_x,  H2 = f_v - g_y,
///   H3 = (x-u) f_u + (1+y-v) f_v + f - g.
Eigen::Vector3d evaluate_H(const ContactPair& p, const SurfaceJet& f, const SurfaceJet& g);

/// Analytic 3x4 derivative of evaluate_H with respect to (u,v,x,y).
Eigen::Matrix<double, 3, 4> jacobian_H(const ContactPair& p, const SurfaceJet& f,
                                       const SurfaceJet& g);

enum class NewtonStatus { Converged, NoConvergence, RankDeficient };

struct NewtonResult {
  NewtonStatus status = NewtonStatus::NoConvergence;
  ContactPair point;
  int iterations = 0;
  double residual = 0.0;
};

/// Minimum-norm least-squares Newton for the underdetermined system H = 0
/// (3 equations, 4 unknowns), with step backtracking.
NewtonResult solve_newton(const ContactPair& seed, const SurfaceJet& f, const SurfaceJet& g,
                          double tol = 1e-12, int max_iter = 50);

struct TraceOptions {
  double step = 1e-3;
  int max_steps = 10000;       // per branch direction
  double domain_bound = 0.5;   // trace stops outside |u|,|v|,|x|,|y| <= bound
  double tol = 1e-12;          // corrector residual target
};

struct TraceResult {
  std::vector<BinodalCurve> curves;  // one (regular origin) or up to two
  bool isolated = false;             // origin is an isolated variety point
};

/// Pseudo-arclength continuation of H^{-1}(0) from the origin. At a regular
/// origin (Jacobian rank 3) traces the single branch both ways; at a rank-2
/// origin seeks up to two branch directions in the Jacobian kernel plane by
/// angular bisection of the reduced residual on a circle of radius = step.
TraceResult trace_binodal(const SurfaceJet& f, const SurfaceJet& g,
                          const TraceOptions& opt = {});

/// (u,v) sequence for side M, (x,y) for side N.
std::vector<std::array<double, 2>> project(const BinodalCurve& curve, Side side);

struct Cusp {
  int index = 0;                             // sample index of the cusp point
  std::array<double, 2> point{};             // projected position
  std::array<double, 2> limiting_tangent{};  // unit vector, one-sided fit
};

/// Cusps of the projected curve: local minima of the discrete tangent norm
/// below step * 1e-2 combined with a reversal of the tangent direction.
/// Curves with fewer than 5 points yield none.
std::vector<Cusp> detect_cusps(const BinodalCurve& curve, Side side);

/// Quad-strip ruled surface between consecutive tie lines, each rule extended
/// by `extension` beyond its two contact points.
TieLineMesh tie_line_mesh(const BinodalCurve& curve, const SurfaceJet& f,
                          const SurfaceJet& g, double extension);

}  // namespace binodal

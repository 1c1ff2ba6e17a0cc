#include "binodal/bitangent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace binodal {

namespace {

using Mat34 = Eigen::Matrix<double, 3, 4>;
using Vec4 = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;

Vec4 as_vec(const ContactPair& p) { return Vec4(p.u, p.v, p.x, p.y); }
ContactPair as_pair(const Vec4& w) { return {w[0], w[1], w[2], w[3]}; }

bool inside_box(const Vec4& w, double bound) {
  return w.cwiseAbs().maxCoeff() <= bound;
}

// Newton corrector constrained to the hyperplane through `anchor` orthogonal
// to `tangent`. Returns true on ||H|| <= tol.
bool correct(Vec4& p, const Vec4& anchor, const Vec4& tangent, const SurfaceJet& f,
             const SurfaceJet& g, double tol, int max_iter = 25) {
  double prev = std::numeric_limits<double>::infinity();
  int grew = 0;
  for (int it = 0; it < max_iter; ++it) {
    Vec3 H = evaluate_H(as_pair(p), f, g);
    double r = H.norm();
    if (r <= tol) return true;
    if (!std::isfinite(r)) return false;
    if (r > prev) {
      if (++grew > 2) return false;
    }
    prev = r;
    Eigen::Matrix4d A;
    A.topRows<3>() = jacobian_H(as_pair(p), f, g);
    A.row(3) = tangent.transpose();
    Vec4 rhs;
    rhs << -H, -tangent.dot(p - anchor);
    Eigen::FullPivLU<Eigen::Matrix4d> lu(A);
    if (lu.rank() < 4) {
      // fall back to a least-squares step near singular configurations
      p += A.jacobiSvd(Eigen::ComputeFullU | Eigen::ComputeFullV).solve(rhs);
    } else {
      p += lu.solve(rhs);
    }
  }
  return evaluate_H(as_pair(p), f, g).norm() <= tol;
}

// Unit kernel vector of the rank-3 Jacobian at p (last right singular vector).
Vec4 kernel_direction(const Mat34& J) {
  Eigen::JacobiSVD<Mat34> svd(J, Eigen::ComputeFullV);
  return svd.matrixV().col(3);
}

int jacobian_rank(const Mat34& J, double scale) {
  Eigen::JacobiSVD<Mat34> svd(J);
  const auto& s = svd.singularValues();
  double thresh = 1e-8 * (scale + s[0]);
  int r = 0;
  for (int i = 0; i < 3; ++i)
    if (s[i] > thresh) ++r;
  return r;
}

struct HalfBranch {
  std::vector<Vec4> pts;
  std::vector<double> res;
  bool truncated = false;
};

// Continuation from the origin along initial direction dir0 (unit). The
// origin itself is not stored here; callers splice it in.
HalfBranch trace_direction(const SurfaceJet& f, const SurfaceJet& g, Vec4 dir0,
                           const TraceOptions& opt) {
  HalfBranch hb;
  Vec4 p = Vec4::Zero();
  Vec4 t = dir0;
  for (int k = 0; k < opt.max_steps; ++k) {
    Vec4 q = p + opt.step * t;
    Vec4 c = q;
    if (!correct(c, q, t, f, g, opt.tol)) {
      hb.truncated = true;
      break;
    }
    if (!inside_box(c, opt.domain_bound)) break;
    // guard against the corrector snapping back through the current point
    if ((c - p).dot(t) <= 0.25 * opt.step) {
      hb.truncated = true;
      break;
    }
    p = c;
    hb.pts.push_back(p);
    hb.res.push_back(evaluate_H(as_pair(p), f, g).norm());
    Mat34 J = jacobian_H(as_pair(p), f, g);
    if (jacobian_rank(J, f.scale() + g.scale()) == 3) {
      Vec4 k4 = kernel_direction(J);
      if (k4.dot(t) < 0) k4 = -k4;
      t = k4;
    }
    // else: passing through a singular point of the variety; keep the old
    // tangent and let the corrector pick the branch
  }
  return hb;
}

BinodalCurve assemble(const HalfBranch& back, const HalfBranch& fwd) {
  BinodalCurve c;
  c.points.reserve(back.pts.size() + fwd.pts.size() + 1);
  c.residual.reserve(c.points.capacity());
  for (auto it = back.pts.rbegin(); it != back.pts.rend(); ++it)
    c.points.push_back(as_pair(*it));
  for (auto it = back.res.rbegin(); it != back.res.rend(); ++it) c.residual.push_back(*it);
  c.points.push_back(ContactPair{});
  c.residual.push_back(0.0);
  for (const auto& w : fwd.pts) c.points.push_back(as_pair(w));
  for (double r : fwd.res) c.residual.push_back(r);
  c.truncated_front = back.truncated;
  c.truncated_back = fwd.truncated;
  c.arclength.resize(c.points.size());
  double s = 0.0;
  for (size_t i = 0; i + 1 < c.points.size(); ++i) {
    c.arclength[i] = s;
    s += (as_vec(c.points[i + 1]) - as_vec(c.points[i])).norm();
  }
  if (!c.points.empty()) c.arclength.back() = s;
  return c;
}

void mark_cusps(BinodalCurve& c) {
  for (const auto& cu : detect_cusps(c, Side::M)) c.cusp_indices_M.push_back(cu.index);
  for (const auto& cu : detect_cusps(c, Side::N)) c.cusp_indices_N.push_back(cu.index);
}

}  // namespace

Vec3 evaluate_H(const ContactPair& p, const SurfaceJet& f, const SurfaceJet& g) {
  double fu = partial(f, 1, 0, p.u, p.v), fv = partial(f, 0, 1, p.u, p.v);
  double gx = partial(g, 1, 0, p.x, p.y), gy = partial(g, 0, 1, p.x, p.y);
  double fval = evaluate(f, p.u, p.v), gval = evaluate(g, p.x, p.y);
  return Vec3(fu - gx, fv - gy,
              (p.x - p.u) * fu + (1.0 + p.y - p.v) * fv + fval - gval);
}

Mat34 jacobian_H(const ContactPair& p, const SurfaceJet& f, const SurfaceJet& g) {
  double fu = partial(f, 1, 0, p.u, p.v), fv = partial(f, 0, 1, p.u, p.v);
  double fuu = partial(f, 2, 0, p.u, p.v), fuv = partial(f, 1, 1, p.u, p.v),
         fvv = partial(f, 0, 2, p.u, p.v);
  double gx = partial(g, 1, 0, p.x, p.y), gy = partial(g, 0, 1, p.x, p.y);
  double gxx = partial(g, 2, 0, p.x, p.y), gxy = partial(g, 1, 1, p.x, p.y),
         gyy = partial(g, 0, 2, p.x, p.y);
  double du = p.x - p.u, dv = 1.0 + p.y - p.v;
  Mat34 J;
  J << fuu, fuv, -gxx, -gxy,
       fuv, fvv, -gxy, -gyy,
       du * fuu + dv * fuv, du * fuv + dv * fvv, fu - gx, fv - gy;
  return J;
}

NewtonResult solve_newton(const ContactPair& seed, const SurfaceJet& f, const SurfaceJet& g,
                          double tol, int max_iter) {
  NewtonResult out;
  Vec4 p = as_vec(seed);
  double scale = f.scale() + g.scale();
  for (int it = 0; it <= max_iter; ++it) {
    Vec3 H = evaluate_H(as_pair(p), f, g);
    double r = H.norm();
    out.iterations = it;
    out.residual = r;
    out.point = as_pair(p);
    if (r <= tol) {
      out.status = NewtonStatus::Converged;
      return out;
    }
    if (it == max_iter || !std::isfinite(r)) break;
    Mat34 J = jacobian_H(as_pair(p), f, g);
    if (jacobian_rank(J, scale) < 3) {
      out.status = NewtonStatus::RankDeficient;
      return out;
    }
    // minimum-norm step: J J^T y = -H, step = J^T y
    Eigen::Matrix3d JJt = J * J.transpose();
    Vec4 step = J.transpose() * JJt.ldlt().solve(-H);
    // backtracking
    double lam = 1.0;
    Vec4 cand = p + step;
    for (int bt = 0; bt < 12; ++bt) {
      if (evaluate_H(as_pair(cand), f, g).norm() < r) break;
      lam *= 0.5;
      cand = p + lam * step;
    }
    p = cand;
  }
  out.status = NewtonStatus::NoConvergence;
  return out;
}

TraceResult trace_binodal(const SurfaceJet& f, const SurfaceJet& g, const TraceOptions& opt) {
  TraceResult out;
  double scale = f.scale() + g.scale();
  Mat34 J0 = jacobian_H(ContactPair{}, f, g);
  int rank = jacobian_rank(J0, scale);

  if (rank == 3) {
    Vec4 t = kernel_direction(J0);
    HalfBranch fwd = trace_direction(f, g, t, opt);
    HalfBranch back = trace_direction(f, g, -t, opt);
    out.curves.push_back(assemble(back, fwd));
    mark_cusps(out.curves.back());
    return out;
  }
  if (rank < 2)
    throw std::domain_error("trace_binodal: origin Jacobian rank < 2, variety is not curve-like");

  // rank-2 origin: branch directions live in the 2-dimensional kernel plane.
  // Probe the circle of radius = step; the reduced residual is the component
  // of H along the left null direction, whose leading part is a quadratic
  // form with the branch tangents as its zero directions.
  Eigen::JacobiSVD<Mat34> svd(J0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Vec4 k1 = svd.matrixV().col(2), k2 = svd.matrixV().col(3);
  Vec3 n = svd.matrixU().col(2);
  auto reduced = [&](double theta) {
    Vec4 w = opt.step * (std::cos(theta) * k1 + std::sin(theta) * k2);
    return n.dot(evaluate_H(as_pair(w), f, g));
  };
  const int nsamp = 1440;
  std::vector<double> thetas;
  double r_prev = reduced(0.0);
  for (int i = 1; i <= nsamp; ++i) {
    double th = 2.0 * std::numbers::pi * i / nsamp;
    double r = reduced(th);
    if ((r_prev < 0.0 && r > 0.0) || (r_prev > 0.0 && r < 0.0)) {
      double lo = 2.0 * std::numbers::pi * (i - 1) / nsamp, hi = th;
      double flo = r_prev;
      for (int b = 0; b < 60; ++b) {
        double mid = 0.5 * (lo + hi), fm = reduced(mid);
        if ((flo < 0) == (fm < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      thetas.push_back(0.5 * (lo + hi));
    }
    r_prev = r;
  }
  if (thetas.empty()) {
    out.isolated = true;
    return out;
  }

  auto dir_of = [&](double th) -> Vec4 { return std::cos(th) * k1 + std::sin(th) * k2; };

  // pair each direction with its most nearly antipodal partner to form
  // curves passing through the origin
  std::vector<bool> used(thetas.size(), false);
  for (size_t i = 0; i < thetas.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    int mate = -1;
    double best = 0.6;  // radians of slack around pi
    for (size_t j = 0; j < thetas.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(std::remainder(thetas[j] - thetas[i] - std::numbers::pi,
                                         2.0 * std::numbers::pi));
      if (d < best) {
        best = d;
        mate = static_cast<int>(j);
      }
    }
    HalfBranch fwd = trace_direction(f, g, dir_of(thetas[i]), opt);
    HalfBranch back;
    if (mate >= 0) {
      used[mate] = true;
      back = trace_direction(f, g, dir_of(thetas[mate]), opt);
    }
    out.curves.push_back(assemble(back, fwd));
    mark_cusps(out.curves.back());
    if (out.curves.size() == 2) break;
  }
  return out;
}

std::vector<std::array<double, 2>> project(const BinodalCurve& curve, Side side) {
  std::vector<std::array<double, 2>> out;
  out.reserve(curve.points.size());
  for (const auto& p : curve.points)
    out.push_back(side == Side::M ? std::array<double, 2>{p.u, p.v}
                                  : std::array<double, 2>{p.x, p.y});
  return out;
}

std::vector<Cusp> detect_cusps(const BinodalCurve& curve, Side side) {
  std::vector<Cusp> out;
  const size_t n = curve.points.size();
  if (n < 5) return out;
  auto proj = project(curve, side);

  // reference step = median 4-space arclength delta
  std::vector<double> ds(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) ds[i] = curve.arclength[i + 1] - curve.arclength[i];
  std::vector<double> sorted = ds;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  double step = sorted[sorted.size() / 2];
  double thresh = step * 1e-2;

  auto seg = [&](size_t i) {
    return std::array<double, 2>{proj[i + 1][0] - proj[i][0], proj[i + 1][1] - proj[i][1]};
  };
  auto norm = [](const std::array<double, 2>& a) { return std::hypot(a[0], a[1]); };

  // point-centred speed: |proj[i+1]-proj[i-1]| / (s[i+1]-s[i-1])
  std::vector<double> speed(n, std::numeric_limits<double>::infinity());
  for (size_t i = 1; i + 1 < n; ++i) {
    double dd = std::hypot(proj[i + 1][0] - proj[i - 1][0], proj[i + 1][1] - proj[i - 1][1]);
    speed[i] = dd / std::max(curve.arclength[i + 1] - curve.arclength[i - 1], 1e-300);
  }

  int last = -10;
  for (size_t i = 2; i + 2 < n; ++i) {
    bool local_min = speed[i] <= speed[i - 1] && speed[i] <= speed[i + 1];
    if (!local_min || speed[i] * step > thresh) continue;
    // direction reversal across the candidate, averaged over a few segments
    std::array<double, 2> before{0, 0}, after{0, 0};
    size_t w = 3;
    for (size_t k = 1; k <= w; ++k) {
      if (i >= k) {
        auto s0 = seg(i - k);  // seg(i-1), seg(i-2), ... point toward i
        before[0] += s0[0];
        before[1] += s0[1];
      }
      if (i + k < n) {
        auto s1 = seg(i + k - 1);  // seg(i), seg(i+1), ... point away from i
        after[0] += s1[0];
        after[1] += s1[1];
      }
    }
    if (norm(before) == 0.0 || norm(after) == 0.0) continue;
    double dot = before[0] * after[0] + before[1] * after[1];
    if (dot >= 0.0) continue;
    if (static_cast<int>(i) - last < 3) continue;
    last = static_cast<int>(i);

    Cusp cu;
    cu.index = static_cast<int>(i);
    cu.point = proj[i];
    // one-sided least-squares fits p(s)-p_c = A s^2 + B s^3 + C s^4 on each
    // side; the limiting tangent is the direction of A
    auto fit_side = [&](bool forward) -> std::array<double, 2> {
      Eigen::MatrixXd M(0, 3);
      Eigen::VectorXd bx, by;
      std::vector<double> sv;
      std::vector<std::array<double, 2>> pv;
      for (size_t k = 1; k <= 40; ++k) {
        size_t j = forward ? i + k : i - k;
        if (forward && j >= n) break;
        if (!forward && i < k) break;
        double s = std::abs(curve.arclength[j] - curve.arclength[i]);
        if (s > 0.05) break;
        sv.push_back(s);
        pv.push_back({proj[j][0] - proj[i][0], proj[j][1] - proj[i][1]});
      }
      if (sv.size() < 4) return {0, 0};
      M.resize(static_cast<long>(sv.size()), 3);
      bx.resize(static_cast<long>(sv.size()));
      by.resize(static_cast<long>(sv.size()));
      for (size_t k = 0; k < sv.size(); ++k) {
        double s2 = sv[k] * sv[k];
        M(static_cast<long>(k), 0) = s2;
        M(static_cast<long>(k), 1) = s2 * sv[k];
        M(static_cast<long>(k), 2) = s2 * s2;
        bx(static_cast<long>(k)) = pv[k][0];
        by(static_cast<long>(k)) = pv[k][1];
      }
      auto qr = M.colPivHouseholderQr();
      Eigen::VectorXd cx = qr.solve(bx), cy = qr.solve(by);
      return {cx(0), cy(0)};
    };
    auto fa = fit_side(true), fb = fit_side(false);
    double na = std::hypot(fa[0], fa[1]), nb = std::hypot(fb[0], fb[1]);
    std::array<double, 2> tangent{0, 0};
    if (na > 0 && nb > 0) {
      if (fa[0] * fb[0] + fa[1] * fb[1] < 0) {
        fb[0] = -fb[0];
        fb[1] = -fb[1];
      }
      tangent = {fa[0] / na + fb[0] / nb, fa[1] / na + fb[1] / nb};
    } else if (na > 0) {
      tangent = fa;
    } else {
      tangent = fb;
    }
    double nt = std::hypot(tangent[0], tangent[1]);
    if (nt > 0) tangent = {tangent[0] / nt, tangent[1] / nt};
    cu.limiting_tangent = tangent;
    out.push_back(cu);
  }
  return out;
}

TieLineMesh tie_line_mesh(const BinodalCurve& curve, const SurfaceJet& f, const SurfaceJet& g,
                          double extension) {
  if (curve.points.empty()) throw std::invalid_argument("tie_line_mesh: empty curve");
  TieLineMesh mesh;
  mesh.extension = extension;
  mesh.vertices.reserve(2 * curve.points.size());
  for (const auto& p : curve.points) {
    Vec3 pm(p.u, p.v, evaluate(f, p.u, p.v));
    Vec3 pn(p.x, 1.0 + p.y, evaluate(g, p.x, p.y));
    Vec3 d = pn - pm;
    double len = d.norm();
    Vec3 dir = len > 0 ? Vec3(d / len) : Vec3(0, 1, 0);
    Vec3 a = pm - extension * dir, b = pn + extension * dir;
    mesh.vertices.push_back({a[0], a[1], a[2]});
    mesh.vertices.push_back({b[0], b[1], b[2]});
  }
  for (int i = 0; i + 1 < static_cast<int>(curve.points.size()); ++i)
    mesh.faces.push_back({2 * i, 2 * i + 1, 2 * i + 3, 2 * i + 2});
  return mesh;
}

}  // namespace binodal

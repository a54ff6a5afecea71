#pragma once

/**
 * @file surface_jets.hpp
 * @brief Jet-valued surface geometry in CP^n(rho) from an arbitrary lift.
 *
 * Every field is a jet about the evaluation point. Differentiating a field
 * costs one order of validity: with input jets of order N,
 *
 *   tangent lifts, metric, frame          exact through order N-1
 *   sigma, H, A_H, T, cos(theta), S       exact through order N-2
 *   nabla-perp H, Christoffel derivatives exact through order N-3
 *
 * so order 3 suffices for nabla-perp H and the intrinsic curvature, and
 * order 4 for the normal Laplacian of H and the Laplacian of |S|^2.
 */

#include <array>
#include <cmath>
#include <sstream>

#include "cpbih/calculus.hpp"
#include "cpbih/error.hpp"
#include "cpbih/jet_vector.hpp"

namespace cpbih {

template <int N>
using RJet2x2 = std::array<std::array<RJet<N>, 2>, 2>;

template <int N>
struct SurfaceJets {
  double rho = 0.0;
  JetVec<N> lift;                   ///< raw chart value f(u,v)
  RJet<N> lift_norm2;               ///< |f|^2
  JetVec<N> z;                      ///< f rescaled onto S^{2n+1}(rho/4)
  std::array<RJet<N>, 2> lambda;    ///< vertical drift <d_a f, i f>/|f|^2
  std::array<JetVec<N>, 2> x;       ///< horizontal lifts of d_u, d_v
  RJet2x2<N> g;                     ///< first fundamental form
  RJet2x2<N> ginv;
  RJet<N> detg;
  std::array<JetVec<N>, 2> e;       ///< orthonormal frame E1, E2 (Gram-Schmidt on d_u, d_v)
  RJet2x2<N> frame;                 ///< E_k = sum_a frame[k][a] X_a
  std::array<std::array<JetVec<N>, 2>, 2> ambient;  ///< nabla-bar_{d_a} X_b
  std::array<std::array<JetVec<N>, 2>, 2> sigma;    ///< sigma(d_a, d_b)
  std::array<std::array<JetVec<N>, 2>, 2> sigma_on; ///< sigma(E_k, E_l)
  JetVec<N> h;                      ///< mean curvature vector
  std::array<JetVec<N>, 2> dperp_h; ///< nabla-perp_{d_a} H
  JetVec<N> jh;                     ///< J H
  JetVec<N> t;                      ///< tangent part of JH
  JetVec<N> nn;                     ///< normal part of JH
  std::array<RJet<N>, 2> t_on;      ///< T in the frame E
  RJet2x2<N> a_h;                   ///< A_H in the frame E
  RJet<N> h2;                       ///< |H|^2
  RJet<N> cos_theta;                ///< <J E1, E2>

  /// Complex-orthogonal projection onto f^perp.
  JetVec<N> project(const JetVec<N>& w) const {
    const CJet<N> c = herm(w, lift) / complexify(lift_norm2);
    return w - c * lift;
  }

  /// Covariant derivative along d_axis of a horizontal field.
  JetVec<N> cov(int axis, const JetVec<N>& y) const {
    return project(y.partial(axis)) - lambda[axis] * jmul(y);
  }

  JetVec<N> tan(const JetVec<N>& w) const {
    return re_inner(w, e[0]) * e[0] + re_inner(w, e[1]) * e[1];
  }

  JetVec<N> nor(const JetVec<N>& w) const { return w - tan(w); }

  /// Derivative of a scalar field along E_k.
  RJet<N> along(int k, const RJet<N>& s) const {
    return frame[k][0] * s.partial(0) + frame[k][1] * s.partial(1);
  }

  /// Derivative of a vector field along E_k (covariant, ambient).
  JetVec<N> cov_along(int k, const JetVec<N>& y) const {
    return frame[k][0] * cov(0, y) + frame[k][1] * cov(1, y);
  }
};

namespace detail {

template <int N>
RJet2x2<N> inverse(const RJet2x2<N>& m, RJet<N>& det) {
  det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const RJet<N> inv = reciprocal(det);
  RJet2x2<N> r;
  r[0][0] = m[1][1] * inv;
  r[1][1] = m[0][0] * inv;
  r[0][1] = -(m[0][1] * inv);
  r[1][0] = -(m[1][0] * inv);
  return r;
}

}  // namespace detail

/// Relative threshold below which the tangent map is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

template <int N>
SurfaceJets<N> surface_jets(const ParamMap& chart, double rho, double u, double v) {
  static_assert(N >= 2, "surface geometry needs at least second-order jets");
  if (!(rho > 0.0)) throw DomainError("surface geometry requires rho > 0");

  SurfaceJets<N> s;
  s.rho = rho;
  s.lift = chart.jet_at<N>(u, v);
  if (!all_finite(s.lift)) {
    std::ostringstream os;
    os << "chart is not smooth at (" << u << ", " << v << ")";
    throw EvaluationError(os.str());
  }
  s.lift_norm2 = re_inner(s.lift, s.lift);
  if (!(s.lift_norm2.value() > 0.0)) throw DegenerateError("chart lift vanishes");

  const RJet<N> scale = (2.0 / std::sqrt(rho)) * pow(s.lift_norm2, -0.5);
  s.z = scale * s.lift;
  for (int a = 0; a < 2; ++a) {
    const JetVec<N> d = s.lift.partial(a);
    s.lambda[a] = imag(herm(d, s.lift)) / s.lift_norm2;
    s.x[a] = scale * s.project(d);
  }

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s.g[a][b] = re_inner(s.x[a], s.x[b]);
  s.ginv = detail::inverse(s.g, s.detg);

  // Gram-Schmidt on (d_u, d_v).
  const double guu = s.g[0][0].value();
  if (!(guu > 0.0) || !(s.detg.value() > kRankTolerance * guu * s.g[1][1].value())) {
    std::ostringstream os;
    os << "tangent map has rank < 2 at (" << u << ", " << v << ")";
    throw ImmersionError(os.str());
  }
  const RJet<N> inv_nu = pow(s.g[0][0], -0.5);
  s.e[0] = inv_nu * s.x[0];
  const RJet<N> proj = s.g[0][1] / s.g[0][0];
  const RJet<N> inv_nw = pow(s.detg / s.g[0][0], -0.5);
  s.e[1] = inv_nw * (s.x[1] - proj * s.x[0]);
  s.frame[0][0] = inv_nu;
  s.frame[0][1] = RJet<N>(0.0);
  s.frame[1][0] = -(inv_nw * proj);
  s.frame[1][1] = inv_nw;

  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      s.ambient[a][b] = s.cov(a, s.x[b]);
      s.sigma[a][b] = s.nor(s.ambient[a][b]);
    }
  }
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      JetVec<N> acc(s.lift.size());
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) acc += (s.frame[k][a] * s.frame[l][b]) * s.sigma[a][b];
      s.sigma_on[k][l] = acc;
    }
  }

  s.h = JetVec<N>(s.lift.size());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s.h += (0.5 * s.ginv[a][b]) * s.sigma[a][b];
  s.h2 = re_inner(s.h, s.h);

  for (int a = 0; a < 2; ++a) s.dperp_h[a] = s.nor(s.cov(a, s.h));

  s.jh = jmul(s.h);
  s.t = s.tan(s.jh);
  s.nn = s.jh - s.t;
  for (int k = 0; k < 2; ++k) s.t_on[k] = re_inner(s.jh, s.e[k]);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) s.a_h[k][l] = re_inner(s.sigma_on[k][l], s.h);
  s.cos_theta = re_inner(jmul(s.e[0]), s.e[1]);
  return s;
}

/// Gaussian curvature from the metric alone (Christoffel symbols of g).
template <int N>
double intrinsic_gaussian_curvature(const SurfaceJets<N>& s) {
  static_assert(N >= 3, "intrinsic curvature needs third-order jets");
  std::array<RJet2x2<N>, 2> dg;  // dg[c][a][b] = d_c g_ab
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) dg[c][a][b] = s.g[a][b].partial(c);

  // gamma[c][a][b] = Gamma^c_{ab}
  std::array<RJet2x2<N>, 2> gamma;
  for (int c = 0; c < 2; ++c) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        RJet<N> acc;
        for (int d = 0; d < 2; ++d) {
          acc += s.ginv[c][d] * (dg[a][b][d] + dg[b][a][d] - dg[d][a][b]);
        }
        gamma[c][a][b] = 0.5 * acc;
      }
    }
  }
  // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
  auto riemann = [&](int a, int b, int c, int d) {
    double r = gamma[a][d][b].partial(c).value() - gamma[a][c][b].partial(d).value();
    for (int e = 0; e < 2; ++e) {
      r += gamma[a][c][e].value() * gamma[e][d][b].value() -
           gamma[a][d][e].value() * gamma[e][c][b].value();
    }
    return r;
  };
  double r1212 = 0.0;
  for (int a = 0; a < 2; ++a) r1212 += s.g[0][a].value() * riemann(a, 1, 0, 1);
  return r1212 / s.detg.value();
}

}  // namespace cpbih

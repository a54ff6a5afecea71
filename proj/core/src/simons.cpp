#include "cpbih/simons.hpp"

#include <cmath>
#include <limits>

#include "cpbih/surface_jets.hpp"

namespace cpbih {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <int N>
RJet2x2<N> s_field(const SurfaceJets<N>& s) {
  const double rho = s.rho;
  const RJet<N> t2 = s.t_on[0] * s.t_on[0] + s.t_on[1] * s.t_on[1];
  const RJet<N> diag = (1.5 * rho) * t2 + 8.0 * s.h2 * s.h2;
  RJet2x2<N> out;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      out[k][l] = 8.0 * s.h2 * s.a_h[k][l] + (3.0 * rho) * s.t_on[k] * s.t_on[l];
      if (k == l) out[k][l] -= diag;
    }
  }
  return out;
}

template <int N>
RJet<N> frob2(const RJet2x2<N>& m) {
  return m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1];
}

double s_norm2_at(const Chart& chart, double u, double v) {
  const auto s = surface_jets<2>(chart.map, chart.rho, u, v);
  return frob2(s_field(s)).value();
}

}  // namespace

Eigen::Matrix2d q_form(const FundamentalData& d, double rho) {
  const double h2 = d.h.squaredNorm();
  return 8.0 * h2 * d.a_h + 3.0 * rho * d.t_frame * d.t_frame.transpose();
}

double s_bound(double rho, double h2) {
  if (rho == 0.0) throw DomainError("the |S| bound needs rho != 0");
  if (!(h2 > 0.0)) throw DomainError("the |S| bound needs |H| > 0");
  if (rho < 0.0) return (std::sqrt(9.0 * rho * rho + 256.0 * h2 * h2) - 3.0 * rho) * h2 / std::sqrt(2.0);
  return (std::sqrt(9.0 * rho * rho + 256.0 * rho * h2 + 256.0 * h2 * h2) + 3.0 * rho) * h2 / std::sqrt(2.0);
}

SimonsState s_operator(const FundamentalData& d, double rho) {
  SimonsState st;
  const double h2 = d.h.squaredNorm();
  const double t2 = d.t_frame.squaredNorm();
  st.q = q_form(d, rho);
  st.s = 8.0 * h2 * d.a_h + 3.0 * rho * d.t_frame * d.t_frame.transpose() -
         (1.5 * rho * t2 + 8.0 * h2 * h2) * Eigen::Matrix2d::Identity();
  st.phi_h = d.a_h - 0.5 * d.a_h.trace() * Eigen::Matrix2d::Identity();
  st.norm_s = st.s.norm();
  const Eigen::Matrix2d from_q = st.q - 0.5 * st.q.trace() * Eigen::Matrix2d::Identity();
  st.sq_residual = (st.s - from_q).cwiseAbs().maxCoeff();
  // |H| below 1e-8 counts as minimal, matching pmc_biharmonic_residual.
  st.bound = (rho != 0.0 && h2 > 1e-16) ? s_bound(rho, h2) : kNaN;
  return st;
}

double st_t_ratio(const FundamentalData& d, const SimonsState& st) {
  const double t2 = d.t_frame.squaredNorm();
  if (t2 == 0.0 || st.norm_s == 0.0) return kNaN;
  return std::abs(d.t_frame.dot(st.s * d.t_frame)) / (t2 * st.norm_s);
}

std::optional<double> k_formula(const FundamentalData& d, const SimonsState& st, double rho, double minimal_tol) {
  if (!(d.h_norm > minimal_tol)) return std::nullopt;
  const double h2 = d.h_norm * d.h_norm;
  const double h6 = h2 * h2 * h2;
  const double t2 = d.t_frame.squaredNorm();
  const double stt = d.t_frame.dot(st.s * d.t_frame);
  double k = rho / 4.0 * (1.0 + 3.0 * d.cos_theta * d.cos_theta) + h2 - st.norm_s * st.norm_s / (128.0 * h6) -
             9.0 * rho * rho * t2 * t2 / (256.0 * h6) + 3.0 * rho * stt / (64.0 * h6);
  // The normal frame starts with H/|H|; the remaining shape operators enter as they are.
  for (std::size_t a = 1; a < d.shape.size(); ++a) k += d.shape[a].determinant();
  return k;
}

std::optional<double> k_formula_residual(const FundamentalData& d, const SimonsState& st, double rho,
                                         double minimal_tol) {
  const auto k = k_formula(d, st, rho, minimal_tol);
  if (!k) return std::nullopt;
  return std::abs(*k - d.k_gauss);
}

SimonsResidual simons_residual(const Chart& chart, double u, double v, double fd_step) {
  const auto s = surface_jets<4>(chart.map, chart.rho, u, v);
  const RJet2x2<4> sf = s_field(s);
  const RJet<4> n2 = frob2(sf);

  SimonsResidual r;
  r.norm_s2 = n2.value();
  r.k = intrinsic_gaussian_curvature(s);

  // Laplace-Beltrami from coordinate derivatives.
  Eigen::Matrix2d gamma[2];
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double acc = 0.0;
        for (int e = 0; e < 2; ++e) acc += s.ginv[c][e].value() * re_inner(s.ambient[a][b], s.x[e]).value();
        gamma[c](a, b) = acc;
      }
  const double grad[2] = {n2.derivative(1, 0), n2.derivative(0, 1)};
  const double hess[2][2] = {{n2.derivative(2, 0), n2.derivative(1, 1)}, {n2.derivative(1, 1), n2.derivative(0, 2)}};
  auto laplace = [&](const double (&h)[2][2], const double (&g1)[2]) {
    double lap = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double term = h[a][b];
        for (int c = 0; c < 2; ++c) term -= gamma[c](a, b) * g1[c];
        lap += s.ginv[a][b].value() * term;
      }
    return lap;
  };
  r.laplacian = laplace(hess, grad);

  // Independent path: central differences of |S|^2 itself.
  {
    const double h = fd_step;
    const double f0 = r.norm_s2;
    const double fup = s_norm2_at(chart, u + h, v), fum = s_norm2_at(chart, u - h, v);
    const double fvp = s_norm2_at(chart, u, v + h), fvm = s_norm2_at(chart, u, v - h);
    const double fpp = s_norm2_at(chart, u + h, v + h), fpm = s_norm2_at(chart, u + h, v - h);
    const double fmp = s_norm2_at(chart, u - h, v + h), fmm = s_norm2_at(chart, u - h, v - h);
    const double g1[2] = {(fup - fum) / (2.0 * h), (fvp - fvm) / (2.0 * h)};
    const double fuv = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    const double h2m[2][2] = {{(fup - 2.0 * f0 + fum) / (h * h), fuv}, {fuv, (fvp - 2.0 * f0 + fvm) / (h * h)}};
    r.laplacian_fd = laplace(h2m, g1);
  }

  // nabla S in the orthonormal frame: (nabla_k S)_ij = E_k(S_ij) - S(nabla_k E_i, E_j) - S(E_i, nabla_k E_j).
  Eigen::Matrix2d sv;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sv(i, j) = sf[i][j].value();
  Eigen::Matrix2d ds[2];
  for (int k = 0; k < 2; ++k) {
    Eigen::Matrix2d omega;  // omega(m, i) = <nabla_k E_i, E_m>
    for (int i = 0; i < 2; ++i)
      for (int m = 0; m < 2; ++m) omega(m, i) = re_inner(s.cov_along(k, s.e[i]), s.e[m]).value();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) ds[k](i, j) = s.along(k, sf[i][j]).value();
    ds[k] -= omega.transpose() * sv + sv * omega;
  }
  const double grad_s2 = ds[0].squaredNorm() + ds[1].squaredNorm();
  r.grad_s = std::sqrt(grad_s2);
  r.codazzi = (ds[0].col(1) - ds[1].col(0)).norm();
  r.identity = 0.5 * r.laplacian - 2.0 * r.k * r.norm_s2 - grad_s2;
  return r;
}

double holomorphicity_defect(const Chart& chart, double u, double v, double conformal_tol) {
  const auto s = surface_jets<3>(chart.map, chart.rho, u, v);
  const double g11 = s.g[0][0].value(), g22 = s.g[1][1].value(), g12 = s.g[0][1].value();
  if (std::abs(g11 - g22) + 2.0 * std::abs(g12) > conformal_tol * (g11 + g22))
    throw DomainError("chart coordinates are not conformal at the point");

  RJet2x2<3> q;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      q[a][b] = 8.0 * s.h2 * re_inner(s.sigma[a][b], s.h) +
                (3.0 * s.rho) * re_inner(s.x[a], s.jh) * re_inner(s.x[b], s.jh);
  // Q(d_z, d_z) = (Q_uu - Q_vv - 2i Q_uv)/4
  const RJet<3> pr = 0.25 * (q[0][0] - q[1][1]);
  const RJet<3> pi = -0.5 * q[0][1];
  const double re = 0.5 * (pr.derivative(1, 0) - pi.derivative(0, 1));
  const double im = 0.5 * (pi.derivative(1, 0) + pr.derivative(0, 1));
  return std::hypot(re, im);
}

}  // namespace cpbih

#include "cpbih/biharmonic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "cpbih/projective.hpp"

namespace cpbih {

namespace {

// sum_k R(E_k, H) E_k on the orthonormal frame.
ComplexVector curvature_trace(double rho, const std::array<ComplexVector, 2>& e, const ComplexVector& h) {
  return curvature(rho, e[0], h, e[0]) + curvature(rho, e[1], h, e[1]);
}

ComplexVector tangent_part(const std::array<ComplexVector, 2>& e, const ComplexVector& w) {
  return re_inner(w, e[0]) * e[0] + re_inner(w, e[1]) * e[1];
}

// Christoffel symbols Gamma^c_ab at the base point from the ambient covariant
// derivative of the coordinate fields.
template <int N>
std::array<Eigen::Matrix2d, 2> christoffel(const SurfaceJets<N>& s) {
  std::array<Eigen::Matrix2d, 2> gamma;
  for (int c = 0; c < 2; ++c) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        double acc = 0.0;
        for (int d = 0; d < 2; ++d)
          acc += s.ginv[c][d].value() * re_inner(s.ambient[a][b], s.x[d]).value();
        gamma[c](a, b) = acc;
      }
    }
  }
  return gamma;
}

ComplexVector rough_laplacian_of_h(const SurfaceJets<4>& s) {
  const auto gamma = christoffel(s);
  ComplexVector lap = ComplexVector::Zero(s.lift.size());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      ComplexVector term = s.nor(s.cov(a, s.dperp_h[b])).value();
      for (int c = 0; c < 2; ++c) term -= gamma[c](a, b) * s.dperp_h[c].value();
      lap += s.ginv[a][b].value() * term;
    }
  }
  return lap;
}

}  // namespace

ComplexVector rough_normal_laplacian(const Chart& chart, double u, double v) {
  return rough_laplacian_of_h(surface_jets<4>(chart.map, chart.rho, u, v));
}

BitensionResidual bitension_residual(const Chart& chart, double u, double v) {
  const auto s = surface_jets<4>(chart.map, chart.rho, u, v);
  const std::array<ComplexVector, 2> e{s.e[0].value(), s.e[1].value()};
  const ComplexVector h = s.h.value();
  const ComplexVector rtrace = curvature_trace(chart.rho, e, h);
  const ComplexVector rtan = tangent_part(e, rtrace);

  ComplexVector normal = rough_laplacian_of_h(s) + (rtrace - rtan);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) normal += s.a_h[k][l].value() * s.sigma_on[k][l].value();

  ComplexVector tangent = 2.0 * rtan;
  std::array<ComplexVector, 2> dperp;
  for (int k = 0; k < 2; ++k) {
    dperp[k] = s.frame[k][0].value() * s.dperp_h[0].value() + s.frame[k][1].value() * s.dperp_h[1].value();
  }
  for (int k = 0; k < 2; ++k) {
    tangent += s.along(k, s.h2).value() * e[k];
    for (int l = 0; l < 2; ++l) tangent += 2.0 * re_inner(s.sigma_on[k][l].value(), dperp[k]) * e[l];
  }

  BitensionResidual r;
  r.normal = normal.norm();
  r.tangent = tangent.norm();
  r.normal_vector = normal;
  r.tangent_vector = tangent;
  return r;
}

PmcBiharmonicResidual pmc_biharmonic_residual(const FundamentalData& d, double pmc_tol, double minimal_tol) {
  PmcBiharmonicResidual r;
  ComplexVector trace = ComplexVector::Zero(d.h.size());
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) trace += d.a_h(k, l) * d.sigma[k][l];
  const ComplexVector jt = jmul(d.t);
  const ComplexVector jt_tan = tangent_part(d.frame, jt);
  const ComplexVector target = (d.rho / 4.0) * (2.0 * d.h - 3.0 * (jt - jt_tan));
  r.trace_residual = (trace - target).norm();
  r.jt_tangent = jt_tan.norm();
  const double h2 = d.h.squaredNorm();
  r.ah_identity = std::abs(d.a_h.squaredNorm() - (d.rho / 4.0) * (2.0 * h2 + 3.0 * d.t.squaredNorm()));
  r.pmc = d.dperp_h[0].norm() + d.dperp_h[1].norm();
  r.pmc_warning = !(r.pmc <= pmc_tol);
  r.minimal = d.h_norm < minimal_tol;
  return r;
}

PmcBiharmonicResidual pmc_biharmonic_residual(const Chart& chart, double u, double v, double pmc_tol,
                                              double minimal_tol) {
  return pmc_biharmonic_residual(fundamental_data(chart, u, v), pmc_tol, minimal_tol);
}

double CaseIIData::t() const { return std::sqrt(t2); }
double CaseIIData::n() const { return std::sqrt(n2); }

double CaseIIData::gauss_k_with(const Eigen::Matrix2d& a5_alt) const {
  return rho / 4.0 + a3.determinant() + a4.determinant() + a5_alt.determinant() + a6.determinant();
}

double CaseIIData::gauss_k() const { return gauss_k_with(a5); }

Eigen::Matrix2d CaseIIData::a_h() const { return -t() * a3 - n() * a5; }

double CaseIIData::gauss_k_h_frame() const {
  const double hn = std::sqrt(h2);
  const Eigen::Matrix2d along_h = a_h() / hn;
  const Eigen::Matrix2d across = (n() * a3 - t() * a5) / hn;
  return rho / 4.0 + along_h.determinant() + across.determinant() + a4.determinant() + a6.determinant();
}

double CaseIIData::sigma11_norm() const {
  return std::sqrt(a3(0, 0) * a3(0, 0) + a4(0, 0) * a4(0, 0) + a5(0, 0) * a5(0, 0) + a6(0, 0) * a6(0, 0));
}

double case_ii_biharmonic_poly(double rho, double h2, double t2) {
  return 16.0 * h2 * h2 - 10.0 * rho * h2 - 3.0 * rho * t2 + 2.0 * rho * rho;
}

double case_ii_flatness_poly(double rho, double h2, double t2) {
  return 16.0 * h2 * h2 + 4.0 * rho * h2 - 48.0 * t2 * h2 + 22.0 * rho * t2 - 4.0 * rho * rho;
}

CaseIIData solve_case_ii(double rho) {
  if (!(rho > 0.0)) throw DomainError("Case II algebra requires rho > 0");

  // In x = |H|^2/rho, t = |T|^2/rho the first constraint gives
  // t = (16x^2 - 10x + 2)/3; substituting into the second leaves the cubic
  // 48x^3 - 55x^2 + 19x - 2 = 0.
  const Eigen::Vector4d p(-2.0, 19.0, -55.0, 48.0);  // ascending powers
  auto cubic = [&p](double x) { return ((p[3] * x + p[2]) * x + p[1]) * x + p[0]; };
  auto dcubic = [&p](double x) { return (3.0 * p[3] * x + 2.0 * p[2]) * x + p[1]; };
  Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  for (int k = 0; k < 3; ++k) companion(k, 2) = -p[k] / p[3];
  const Eigen::Vector3cd roots = companion.eigenvalues();

  std::vector<std::pair<double, double>> admissible;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(roots[k].imag()) > 1e-9) continue;
    double x = roots[k].real();
    for (int it = 0; it < 4; ++it) {
      const double dx = dcubic(x);
      if (dx == 0.0) break;
      x -= cubic(x) / dx;
    }
    const double t = (16.0 * x * x - 10.0 * x + 2.0) / 3.0;
    const bool strictly_inside = t > 1e-12 && t < x - 1e-12;
    if (strictly_inside && std::abs(2.0 * x - 1.0) > 1e-12) admissible.emplace_back(x, t);
  }
  if (admissible.size() != 1) throw InconsistencyError("Case II system has no unique admissible root");

  CaseIIData d;
  d.rho = rho;
  d.h2 = admissible[0].first * rho;
  d.t2 = admissible[0].second * rho;
  d.n2 = d.h2 - d.t2;
  const double t = d.t(), n = d.n();
  const double denom = 2.0 * d.h2 - rho;
  d.a = (5.0 * rho - 8.0 * d.h2) * t / (4.0 * denom);
  d.c = (rho - 4.0 * d.h2) * n / (2.0 * denom);
  d.b = 0.0;
  d.d = 0.0;

  d.a3 << d.a - t, d.b, d.b, -d.a - t;
  d.a4 << d.b, -d.a - t, -d.a - t, -d.b;
  d.a5 << d.c - n, d.d, d.d, -d.c - n;
  d.a6.setZero();
  d.a5_printed << 1.0 / 3.0, 0.0, 0.0, -1.0;
  d.a5_printed *= 0.5 * std::sqrt(5.0 * rho / 3.0);
  d.a5_typo << d.c - n, d.d, d.d, -d.c - t;

  const double s = d.a * t + d.c * n;
  auto& r = d.residuals;
  r["commuting_a3_a5"] = std::abs(d.a * d.d - d.b * d.c);
  r["ricci_a4"] = std::abs(d.b * (d.b * t + d.d * n) + (d.a + t) * s - rho * t / 8.0);
  r["trace_ah_a4"] = std::abs(d.b * t + d.d * n);
  r["trace_ah_a3"] = std::abs(d.a * s - (5.0 * rho - 8.0 * d.h2) * t / 8.0);
  r["trace_ah_a5"] = std::abs(d.c * s - (rho - 4.0 * d.h2) * n / 4.0);
  r["closed_form_ac"] = std::max(std::abs(d.a - (5.0 * rho - 8.0 * d.h2) * t / (4.0 * denom)),
                                 std::abs(d.c - (rho - 4.0 * d.h2) * n / (2.0 * denom)));
  r["biharmonic_poly"] = std::abs(case_ii_biharmonic_poly(rho, d.h2, d.t2));
  r["flatness_poly"] = std::abs(case_ii_flatness_poly(rho, d.h2, d.t2));
  r["trace_a3"] = std::abs(d.a3.trace() + 2.0 * t);
  r["trace_a4"] = std::abs(d.a4.trace());
  r["trace_a5"] = std::abs(d.a5.trace() + 2.0 * n);
  r["a6"] = d.a6.cwiseAbs().maxCoeff();
  return d;
}

double case_i_mean_curvature(double rho) {
  if (!(rho > 0.0)) throw DomainError("Case I algebra requires rho > 0");
  return std::sqrt(rho) / 2.0;
}

double case_i_consistency_residual(double rho) {
  const double h = case_i_mean_curvature(rho);
  const double h2 = h * h;
  return std::abs(2.0 * h2 * h2 - (rho / 2.0) * h2);
}

}  // namespace cpbih

#include "cpbih/surfaces.hpp"

#include <algorithm>
#include <cmath>

#include "cpbih/projective.hpp"

namespace cpbih {

std::vector<SamplePoint> sample_points(const Domain& d, const Grid& grid) {
  if (grid.nu < 1 || grid.nv < 1) throw DomainError("grid must have at least one cell per side");
  std::vector<SamplePoint> pts;
  pts.reserve(static_cast<std::size_t>(grid.nu * grid.nv));
  for (int i = 0; i < grid.nu; ++i) {
    for (int j = 0; j < grid.nv; ++j) {
      pts.push_back({d.u0 + (i + 0.5) * (d.u1 - d.u0) / grid.nu,
                     d.v0 + (j + 0.5) * (d.v1 - d.v0) / grid.nv});
    }
  }
  return pts;
}

double FundamentalData::sum_det_shape() const {
  double s = 0.0;
  for (const auto& a : shape) s += a.determinant();
  return s;
}

std::vector<ComplexVector> normal_frame(const ComplexVector& z, const std::array<ComplexVector, 2>& frame,
                                        const ComplexVector& h) {
  const int dim = static_cast<int>(z.size());
  const int wanted = 2 * dim - 4;
  std::vector<ComplexVector> seeds;
  if (h.norm() > 1e-9) seeds.push_back(h);
  seeds.push_back(jmul(frame[0]));
  seeds.push_back(jmul(frame[1]));
  for (int k = 0; k < dim; ++k) {
    ComplexVector e = ComplexVector::Zero(dim);
    e[k] = 1.0;
    seeds.push_back(e);
    seeds.push_back(jmul(e));
  }

  std::vector<ComplexVector> out;
  for (const auto& seed : seeds) {
    if (static_cast<int>(out.size()) == wanted) break;
    ComplexVector w = horizontal_part(z, seed);
    for (const auto& e : frame) w -= re_inner(w, e) * e;
    for (const auto& e : out) w -= re_inner(w, e) * e;
    // second pass for orthogonality to round-off
    for (const auto& e : frame) w -= re_inner(w, e) * e;
    for (const auto& e : out) w -= re_inner(w, e) * e;
    const double nw = w.norm();
    if (nw > 1e-6 * std::max(1.0, seed.norm())) out.push_back(w / nw);
  }
  if (static_cast<int>(out.size()) != wanted) throw DegenerateError("normal frame completion failed");
  return out;
}

template <int N>
FundamentalData to_fundamental_data(const SurfaceJets<N>& s) {
  static_assert(N >= 3);
  FundamentalData d;
  d.rho = s.rho;
  d.z = s.z.value();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) d.g(a, b) = s.g[a][b].value();
  d.frame = {s.e[0].value(), s.e[1].value()};
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) d.sigma[k][l] = s.sigma_on[k][l].value();
  d.h = s.h.value();
  d.h_norm = d.h.norm();
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) d.a_h(k, l) = s.a_h[k][l].value();
  for (int k = 0; k < 2; ++k) {
    d.dperp_h[k] = s.frame[k][0].value() * s.dperp_h[0].value() + s.frame[k][1].value() * s.dperp_h[1].value();
  }
  d.t = s.t.value();
  d.t_frame = Eigen::Vector2d(s.t_on[0].value(), s.t_on[1].value());
  d.n_part = s.nn.value();
  d.cos_theta = s.cos_theta.value();

  d.normal_frame = normal_frame(d.z, d.frame, d.h);
  d.shape.reserve(d.normal_frame.size());
  for (const auto& nu : d.normal_frame) {
    Eigen::Matrix2d a;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) a(k, l) = re_inner(d.sigma[k][l], nu);
    d.shape.push_back(a);
  }

  d.k_intrinsic = intrinsic_gaussian_curvature(s);
  d.k_gauss = sectional_curvature(s.rho, d.frame[0], d.frame[1]) + re_inner(d.sigma[0][0], d.sigma[1][1]) -
              d.sigma[0][1].squaredNorm();
  return d;
}

template FundamentalData to_fundamental_data<3>(const SurfaceJets<3>&);
template FundamentalData to_fundamental_data<4>(const SurfaceJets<4>&);
template FundamentalData to_fundamental_data<5>(const SurfaceJets<5>&);

FundamentalData fundamental_data(const Chart& chart, double u, double v) {
  return to_fundamental_data(surface_jets<3>(chart.map, chart.rho, u, v));
}

double pmc_residual(const Chart& chart, const Grid& grid) {
  double sup = 0.0;
  for (const auto& p : sample_points(chart.domain, grid)) {
    const auto d = fundamental_data(chart, p.u, p.v);
    sup = std::max(sup, d.dperp_h[0].norm() + d.dperp_h[1].norm());
  }
  return sup;
}

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

double gauge_invariance_check(const Chart& chart, const Polynomial2& phase, double u, double v) {
  const FundamentalData a = fundamental_data(chart, u, v);
  const Chart regauged{regauge(chart.map, phase), chart.rho, chart.domain, chart.name};
  const FundamentalData b = fundamental_data(regauged, u, v);

  // Lifted vectors of the regauged chart carry the phase e^{i phi}.
  const Complex undo = std::polar(1.0, -phase(u, v));
  auto vec_gap = [&](const ComplexVector& x, const ComplexVector& y) { return (x - undo * y).norm(); };

  double gap = 0.0;
  gap = std::max(gap, vec_gap(a.z, b.z));
  gap = std::max(gap, max_abs(a.g - b.g));
  for (int k = 0; k < 2; ++k) {
    gap = std::max(gap, vec_gap(a.frame[k], b.frame[k]));
    gap = std::max(gap, vec_gap(a.dperp_h[k], b.dperp_h[k]));
    for (int l = 0; l < 2; ++l) gap = std::max(gap, vec_gap(a.sigma[k][l], b.sigma[k][l]));
  }
  gap = std::max(gap, vec_gap(a.h, b.h));
  gap = std::max(gap, vec_gap(a.t, b.t));
  gap = std::max(gap, vec_gap(a.n_part, b.n_part));
  gap = std::max(gap, std::abs(a.h_norm - b.h_norm));
  gap = std::max(gap, max_abs(a.a_h - b.a_h));
  gap = std::max(gap, max_abs(a.t_frame - b.t_frame));
  gap = std::max(gap, std::abs(a.cos_theta - b.cos_theta));
  gap = std::max(gap, std::abs(a.k_intrinsic - b.k_intrinsic));
  gap = std::max(gap, std::abs(a.k_gauss - b.k_gauss));
  gap = std::max(gap, std::abs(a.sum_det_shape() - b.sum_det_shape()));
  return gap;
}

}  // namespace cpbih

#include "cpbih/surfaces.hpp"

#include "cpbih/catalog.hpp"
#include "cpbih/error.hpp"
#include "cpbih/projective.hpp"
#include "test_support.hpp"

using namespace cpbih;

namespace {

// Fubini-Study metric from finite-difference partials of an arbitrary lift:
// g_ab = (4/rho) [Re<f_a, f_b>/|f|^2 - Re(<f_a, f><f, f_b>)/|f|^4].
Eigen::Matrix2d fs_metric_fd(const Chart& c, double u, double v) {
  const FdPartials p = fd_oracle(c.map, u, v, 1, 1e-5);
  const ComplexVector& f = p.partials.value;
  const double n2 = f.squaredNorm();
  Eigen::Matrix2d g;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const ComplexVector& fa = p.partials.first[a];
      const ComplexVector& fb = p.partials.first[b];
      // Hermitian <x, y> = sum x conj(y), which is y.dot(x) in Eigen.
      const Complex fa_f = f.dot(fa), f_fb = fb.dot(f);
      g(a, b) = 4.0 / c.rho * (re_inner(fa, fb) / n2 - (fa_f * f_fb).real() / (n2 * n2));
    }
  return g;
}

}  // namespace

TEST(SamplePoints, CellCentres) {
  const auto pts = sample_points(Domain{0.0, 1.0, 2.0, 4.0}, Grid{2, 4});
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_DOUBLE_EQ(pts.front().u, 0.25);
  EXPECT_DOUBLE_EQ(pts.front().v, 2.25);
  EXPECT_DOUBLE_EQ(pts.back().u, 0.75);
  EXPECT_DOUBLE_EQ(pts.back().v, 3.75);
  EXPECT_THROW(sample_points(Domain{}, Grid{0, 3}), DomainError);
}

TEST(FundamentalData, MetricMatchesFubiniStudyOracle) {
  for (const Chart& c : {generic_chart(3.0), torus_cp2(Branch::Plus), totally_geodesic_rp2(2.0)}) {
    for (const auto& p : sample_points(c.domain, Grid{3, 3})) {
      const FundamentalData d = fundamental_data(c, p.u, p.v);
      EXPECT_LT((d.g - fs_metric_fd(c, p.u, p.v)).cwiseAbs().maxCoeff(), 1e-8) << c.name;
      EXPECT_NEAR(d.z.norm(), 2.0 / std::sqrt(c.rho), 1e-13);
    }
  }
}

TEST(FundamentalData, FramesAreOrthonormalAndHorizontal) {
  const Chart c = generic_chart(3.0);
  const FundamentalData d = fundamental_data(c, 0.3, 0.4);
  std::vector<ComplexVector> all{d.frame[0], d.frame[1]};
  for (const auto& n : d.normal_frame) all.push_back(n);
  ASSERT_EQ(all.size(), 4u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_LT(horizontality_defect(d.z, all[i]), 1e-13);
    for (std::size_t j = 0; j < all.size(); ++j) EXPECT_NEAR(re_inner(all[i], all[j]), i == j ? 1.0 : 0.0, 1e-13);
  }
  // H/|H| leads the normal frame; sigma is normal and symmetric.
  EXPECT_LT((d.normal_frame[0] - d.h / d.h_norm).norm(), 1e-13);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) EXPECT_NEAR(re_inner(d.sigma[k][l], d.frame[0]), 0.0, 1e-12);
  EXPECT_LT((d.sigma[0][1] - d.sigma[1][0]).norm(), 1e-13);
  EXPECT_LT((d.h - 0.5 * (d.sigma[0][0] + d.sigma[1][1])).norm(), 1e-13);
}

TEST(FundamentalData, GaussEquationAgreesWithIntrinsicCurvature) {
  // Two independent routes to K: Brioschi from the metric jets, and Gauss.
  for (const Chart& c : {generic_chart(3.0), generic_chart(0.5), torus_cp2(Branch::Minus)}) {
    for (const auto& p : sample_points(c.domain, Grid{4, 4})) {
      const FundamentalData d = fundamental_data(c, p.u, p.v);
      EXPECT_NEAR(d.k_intrinsic, d.k_gauss, 1e-9 * std::max(1.0, std::abs(d.k_gauss))) << c.name;
    }
  }
}

TEST(FundamentalData, TotallyGeodesicModels) {
  const FundamentalData cp1 = fundamental_data(totally_geodesic_cp1(3.0), 0.1, -0.2);
  EXPECT_LT(cp1.h_norm, 1e-13);
  EXPECT_NEAR(std::abs(cp1.cos_theta), 1.0, 1e-13);
  EXPECT_NEAR(cp1.k_intrinsic, 3.0, 1e-11);
  const FundamentalData rp2 = fundamental_data(totally_geodesic_rp2(3.0), 0.1, -0.2);
  EXPECT_LT(rp2.h_norm, 1e-13);
  EXPECT_NEAR(rp2.cos_theta, 0.0, 1e-13);
  EXPECT_NEAR(rp2.k_intrinsic, 0.75, 1e-11);
}

TEST(PmcResidual, Examples) {
  EXPECT_LT(pmc_residual(totally_geodesic_cp1(4.0), Grid{5, 5}), 1e-12);
  EXPECT_LT(pmc_residual(torus_cp2(Branch::Plus), Grid{5, 5}), 1e-8);
  EXPECT_GT(pmc_residual(generic_chart(4.0), Grid{5, 5}), 1e-2);
}

TEST(GaugeInvariance, Examples) {
  const Polynomial2 constant{{{0, 0, 1.234}}};
  EXPECT_LT(gauge_invariance_check(generic_chart(3.0), constant, 0.3, 0.4), 1e-12);
  const Polynomial2 linear{{{1, 0, 1.0}, {0, 1, 2.0}}};
  EXPECT_LT(gauge_invariance_check(torus_cp2(Branch::Plus), linear, 1.0, 2.0), 1e-9);
}

TEST(GaugeInvariance, RandomPolynomialPhases) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const std::vector<Chart> charts{totally_geodesic_cp1(4.0), generic_chart(2.0), torus_cp2(Branch::Minus),
                                  perturbed_torus(0.5, 0.25, 0.25)};
  for (const Chart& c : charts)
    for (int trial = 0; trial < 5; ++trial) {
      Polynomial2 phase;
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 3; ++j) phase.terms.push_back({i, j, coef(rng)});
      const auto pts = sample_points(c.domain, Grid{2, 2});
      const auto& p = pts[static_cast<std::size_t>(trial) % pts.size()];
      EXPECT_LT(gauge_invariance_check(c, phase, p.u, p.v), 1e-9) << c.name;
    }
}

TEST(FundamentalData, SwappingParametersFlipsOrientationOnly) {
  const Chart c = generic_chart(3.0);
  const Chart s{swap_parameters(c.map), c.rho, c.domain, "swapped"};
  const FundamentalData a = fundamental_data(c, 0.3, 0.4);
  const FundamentalData b = fundamental_data(s, 0.4, 0.3);
  EXPECT_NEAR(a.h_norm, b.h_norm, 1e-12);
  EXPECT_NEAR(a.k_gauss, b.k_gauss, 1e-12);
  EXPECT_NEAR(std::abs(a.cos_theta), std::abs(b.cos_theta), 1e-12);
}

TEST(FundamentalData, SingularPointThrows) {
  const Chart cone{ParamMap(3, [](const auto& u, const auto& v) {
                     using C = complex_of_t<std::decay_t<decltype(u)>>;
                     return std::vector<C>{C(1.0), complexify(u * u), complexify(v)};
                   }),
                   4.0, Domain{}, "fold"};
  EXPECT_THROW(fundamental_data(cone, 0.0, 0.3), ImmersionError);
}

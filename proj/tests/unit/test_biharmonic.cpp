#include "cpbih/biharmonic.hpp"

#include "cpbih/catalog.hpp"
#include "cpbih/error.hpp"
#include "test_support.hpp"

using namespace cpbih;

namespace {

double max_bitension(const Chart& chart, int n) {
  double m = 0.0;
  for (const auto& p : sample_points(chart.domain, Grid{n, n})) {
    const BitensionResidual b = bitension_residual(chart, p.u, p.v);
    m = std::max({m, b.normal, b.tangent});
  }
  return m;
}

double h2_at(const Chart& c, double u, double v) { return fundamental_data(c, u, v).h.squaredNorm(); }

}  // namespace

TEST(Bitension, TotallyGeodesicIsHarmonic) {
  const Chart cp1 = totally_geodesic_cp1(4.0);
  const BitensionResidual b = bitension_residual(cp1, 0.3, -0.2);
  EXPECT_LT(b.normal, 1e-12);
  EXPECT_LT(b.tangent, 1e-12);
}

TEST(Bitension, BiharmonicTori) {
  EXPECT_LT(max_bitension(torus_cp2(Branch::Plus), 5), 1e-6);
  EXPECT_LT(max_bitension(torus_cp2(Branch::Minus), 5), 1e-6);
}

TEST(Bitension, PerturbedTorusIsNotBiharmonic) {
  const Chart c = perturbed_torus(0.5, 0.25, 0.25);
  const BitensionResidual b = bitension_residual(c, 0.1, 0.2);
  EXPECT_GT(b.normal, 1e-3);
  // Homogeneous, so still pmc.
  EXPECT_LT(pmc_biharmonic_residual(c, 0.1, 0.2).pmc, 1e-8);
}

TEST(Bitension, GenericChartHasBothParts) {
  const BitensionResidual b = bitension_residual(generic_chart(4.0), 0.2, 0.1);
  EXPECT_GT(b.normal, 1e-3);
  EXPECT_GT(b.tangent, 1e-3);
}

/// Laplace-Beltrami of |H|^2 by central differences with step h.
static double fd_delta_h2(const Chart& c, double u, double v, double h) {
  const double f0 = h2_at(c, u, v);
  const double fu = (h2_at(c, u + h, v) - h2_at(c, u - h, v)) / (2 * h);
  const double fv = (h2_at(c, u, v + h) - h2_at(c, u, v - h)) / (2 * h);
  const double fuu = (h2_at(c, u + h, v) - 2 * f0 + h2_at(c, u - h, v)) / (h * h);
  const double fvv = (h2_at(c, u, v + h) - 2 * f0 + h2_at(c, u, v - h)) / (h * h);
  const double fuv = (h2_at(c, u + h, v + h) - h2_at(c, u + h, v - h) - h2_at(c, u - h, v + h) +
                      h2_at(c, u - h, v - h)) / (4 * h * h);
  const Eigen::Matrix2d gu = (fundamental_data(c, u + h, v).g - fundamental_data(c, u - h, v).g) / (2 * h);
  const Eigen::Matrix2d gv = (fundamental_data(c, u, v + h).g - fundamental_data(c, u, v - h).g) / (2 * h);
  const std::array<Eigen::Matrix2d, 2> dg{gu, gv};
  const Eigen::Matrix2d gi = fundamental_data(c, u, v).g.inverse();
  const Eigen::Vector2d df(fu, fv);
  Eigen::Matrix2d hess;
  hess << fuu, fuv, fuv, fvv;
  double delta = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double gamma_df = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          gamma_df += 0.5 * gi(k, l) * (dg[a](b, l) + dg[b](a, l) - dg[l](a, b)) * df[k];
      delta += gi(a, b) * (hess(a, b) - gamma_df);
    }
  return delta;
}

TEST(RoughNormalLaplacian, MatchesFiniteDifferenceOracle) {
  // <trace nabla-perp^2 H, H> = (1/2) Delta |H|^2 - |nabla-perp H|^2. The
  // difference quotients are O(h^2), so one Richardson step is applied.
  const Chart c = generic_chart(4.0);
  const double u = 0.2, v = 0.1;
  const FundamentalData d = fundamental_data(c, u, v);
  const double lhs = re_inner(rough_normal_laplacian(c, u, v), d.h);
  const double coarse = fd_delta_h2(c, u, v, 1e-3), fine = fd_delta_h2(c, u, v, 5e-4);
  const double delta = (4.0 * fine - coarse) / 3.0;
  const double grad2 = d.dperp_h[0].squaredNorm() + d.dperp_h[1].squaredNorm();
  const double rhs = 0.5 * delta - grad2;
  EXPECT_GT(std::abs(rhs), 1e-2);
  EXPECT_NEAR(lhs, rhs, 1e-6);
  // Without the extrapolation the coarse quotient is visibly off.
  EXPECT_GT(std::abs(lhs - (0.5 * coarse - grad2)), 1e-6);
}

TEST(PmcReduction, Tori) {
  for (Branch br : {Branch::Plus, Branch::Minus}) {
    const PmcBiharmonicResidual r = pmc_biharmonic_residual(torus_cp2(br), 0.3, 0.7);
    EXPECT_LT(r.trace_residual, 1e-9);
    EXPECT_LT(r.jt_tangent, 1e-10);
    EXPECT_LT(r.ah_identity, 1e-9);
    EXPECT_FALSE(r.pmc_warning);
    EXPECT_FALSE(r.minimal);
  }
}

TEST(PmcReduction, MinimalTorusIsFlagged) {
  const PmcBiharmonicResidual r = pmc_biharmonic_residual(perturbed_torus(1.0 / 3, 1.0 / 3, 1.0 / 3), 0.2, 0.4);
  EXPECT_TRUE(r.minimal);
  EXPECT_LT(r.trace_residual, 1e-9);
}

TEST(PmcReduction, GenericChartWarns) {
  EXPECT_TRUE(pmc_biharmonic_residual(generic_chart(4.0), 0.2, 0.1).pmc_warning);
}

TEST(PmcReduction, PseudoUmbilicalPoint) {
  // With T = 0 and A_H = |H|^2 id, the reduction holds iff |H|^2 = rho/4.
  const double rho = 3.0;
  const double h = case_i_mean_curvature(rho);
  const PmcBiharmonicResidual ok = pmc_biharmonic_residual(test::pseudo_umbilical_point(rho, h, 0.4, -0.3));
  EXPECT_LT(ok.trace_residual, 1e-14);
  EXPECT_LT(ok.ah_identity, 1e-14);
  const PmcBiharmonicResidual bad = pmc_biharmonic_residual(test::pseudo_umbilical_point(rho, 1.1 * h, 0.4, -0.3));
  EXPECT_GT(bad.trace_residual, 0.1);
}

TEST(CaseI, MeanCurvature) {
  EXPECT_NEAR(case_i_mean_curvature(4.0), 1.0, 1e-15);
  for (double rho : {0.5, 3.0, 10.0}) EXPECT_LT(case_i_consistency_residual(rho), 1e-13);
  EXPECT_THROW(case_i_mean_curvature(0.0), DomainError);
}

TEST(CaseII, ValuesAtRhoThree) {
  const CaseIIData d = solve_case_ii(3.0);
  EXPECT_NEAR(d.h2, 1.0, 1e-14);
  EXPECT_NEAR(d.t2, 4.0 / 9.0, 1e-14);
  EXPECT_NEAR(d.n2, 5.0 / 9.0, 1e-14);
  Eigen::Matrix2d a3, a4, a5;
  a3 << -11.0 / 6.0, 0.0, 0.0, 0.5;
  a4 << 0.0, 0.5, 0.5, 0.0;
  a5 = -std::sqrt(5.0) / 2.0 * Eigen::Vector2d(1.0 / 3.0, 1.0).asDiagonal().toDenseMatrix();
  EXPECT_LT((d.a3 - a3).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((d.a4 - a4).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((d.a5 - a5).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(d.a6.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_NEAR(d.gauss_k(), 0.0, 1e-13);
  EXPECT_NEAR(d.gauss_k_h_frame(), 0.0, 1e-13);
  // The printed A5 does not give a flat surface.
  EXPECT_NEAR(d.gauss_k_with(d.a5_printed), -5.0 / 6.0, 1e-13);
}

TEST(CaseII, ResidualsVanishAcrossRho) {
  for (double rho : {1.0, 3.0, 4.0, 10.0}) {
    const CaseIIData d = solve_case_ii(rho);
    EXPECT_NEAR(d.h2, rho / 3.0, 1e-13 * rho);
    EXPECT_NEAR(d.t2, 4.0 * rho / 27.0, 1e-13 * rho);
    EXPECT_LT(d.t2, d.h2);
    for (const auto& [name, r] : d.residuals) EXPECT_LT(std::abs(r), 1e-12 * rho * rho) << name << " rho=" << rho;
    // Shape operators scale by sqrt(rho/3).
    EXPECT_NEAR(d.a3(0, 0), -11.0 / 6.0 * std::sqrt(rho / 3.0), 1e-13 * rho);
    EXPECT_NEAR(d.gauss_k(), 0.0, 1e-12 * rho);
    EXPECT_NEAR(d.a_h().trace(), 2.0 * d.h2, 1e-12 * rho);
  }
  EXPECT_THROW(solve_case_ii(0.0), DomainError);
  EXPECT_THROW(solve_case_ii(-1.0), DomainError);
}

TEST(CaseII, PolynomialsShareTheLagrangianRoots) {
  // On |T| = |H| the flatness polynomial is -2 times the biharmonic one, so
  // both vanish at the roots of 16x^2 - 13x + 2; the solver rejects them.
  for (double x : {(13.0 + std::sqrt(41.0)) / 32.0, (13.0 - std::sqrt(41.0)) / 32.0}) {
    EXPECT_NEAR(case_ii_biharmonic_poly(4.0, 4.0 * x, 4.0 * x), 0.0, 1e-12);
    EXPECT_NEAR(case_ii_flatness_poly(4.0, 4.0 * x, 4.0 * x), 0.0, 1e-12);
  }
  EXPECT_NEAR(case_ii_biharmonic_poly(3.0, 1.0, 4.0 / 9.0), 0.0, 1e-13);
  EXPECT_NEAR(case_ii_flatness_poly(3.0, 1.0, 4.0 / 9.0), 0.0, 1e-13);
  EXPECT_GT(std::abs(case_ii_biharmonic_poly(3.0, 1.0, 0.5)), 1e-2);
}

TEST(CaseII, SyntheticPointSatisfiesReduction) {
  const CaseIIData cd = solve_case_ii(3.0);
  const PmcBiharmonicResidual r = pmc_biharmonic_residual(test::case_ii_point(cd));
  EXPECT_LT(r.trace_residual, 1e-13);
  EXPECT_LT(r.ah_identity, 1e-13);
  EXPECT_LT(r.jt_tangent, 1e-15);
  EXPECT_NEAR(cd.sigma11_norm(), test::case_ii_point(cd).sigma[0][0].norm(), 1e-14);
}

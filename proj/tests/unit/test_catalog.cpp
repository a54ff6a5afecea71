#include "cpbih/catalog.hpp"

#include "cpbih/error.hpp"
#include "cpbih/projective.hpp"
#include "test_support.hpp"

using namespace cpbih;

TEST(TorusRadii, Branches) {
  const double s = std::sqrt(41.0);
  const TorusSpec p = torus_radii(Branch::Plus), m = torus_radii(Branch::Minus);
  EXPECT_NEAR(p.r1 * p.r1, (9.0 + s) / 20.0, 1e-15);
  EXPECT_NEAR(p.r2 * p.r2, (11.0 - s) / 40.0, 1e-15);
  EXPECT_NEAR(m.r1 * m.r1, (9.0 - s) / 20.0, 1e-15);
  EXPECT_NEAR(m.r3 * m.r3, (11.0 + s) / 40.0, 1e-15);
  for (const TorusSpec& t : {p, m}) EXPECT_NEAR(t.r1 * t.r1 + t.r2 * t.r2 + t.r3 * t.r3, 1.0, 1e-15);
  EXPECT_THROW(torus_radii(Branch::Custom), DomainError);
  EXPECT_THROW(torus_cp2(Branch::Custom), DomainError);
}

TEST(TorusChart, OrthonormalFlatLagrangian) {
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const Chart c = torus_cp2(b);
    for (const auto& pt : sample_points(c.domain, Grid{3, 3})) {
      const FundamentalData d = fundamental_data(c, pt.u, pt.v);
      EXPECT_LT((d.g - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_NEAR(d.k_intrinsic, 0.0, 1e-10);
      EXPECT_NEAR(d.k_gauss, 0.0, 1e-10);
      EXPECT_NEAR(d.cos_theta, 0.0, 1e-12);
      // Lagrangian: JH is tangent, so T = JH.
      EXPECT_NEAR((d.t - jmul(d.h)).norm(), 0.0, 1e-10);
    }
  }
}

TEST(PerturbedTorus, Validation) {
  EXPECT_NO_THROW(perturbed_torus(0.5, 0.25, 0.25));
  EXPECT_THROW(perturbed_torus(0.5, 0.5, 0.0), DomainError);
  EXPECT_THROW(perturbed_torus(0.5, 0.25, 0.3), DomainError);
  EXPECT_THROW(perturbed_torus(-0.5, 1.0, 0.5), DomainError);
}

TEST(Controls, ModelCurvatures) {
  EXPECT_NEAR(fundamental_data(totally_geodesic_cp1(4.0), 0.3, 0.1).k_intrinsic, 4.0, 1e-9);
  EXPECT_NEAR(fundamental_data(totally_geodesic_rp2(4.0), 0.3, 0.1).k_intrinsic, 1.0, 1e-9);
}

TEST(GammaSpecs, ValuesAndFrames) {
  const auto [g1, g2] = gamma_specs(6.0);
  EXPECT_NEAR(g1.curvatures[0], std::sqrt(7.0), 1e-15);
  EXPECT_NEAR(g1.curvatures[1], 0.5 * std::sqrt(5.0 / 7.0), 1e-15);
  EXPECT_NEAR(g1.curvatures[2], 1.5 / std::sqrt(7.0), 1e-15);
  EXPECT_NEAR(g2.curvatures[0], std::sqrt(3.0), 1e-15);
  // The stored table is the I3 class table.
  const Eigen::Matrix4d t = helix_class_torsions(g1.curvatures[0], g1.curvatures[1], g1.curvatures[2], CurveClass::I3);
  EXPECT_LT((t - *g1.target_torsions).cwiseAbs().maxCoeff(), 1e-14);
  for (const CurveSpec& g : {g1, g2}) {
    const FrenetFrame f = initial_frame(g);
    EXPECT_LT((complex_torsions(f) - *g.target_torsions).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(frame_defects(f, g.rho).orthonormality, 1e-13);
  }
  EXPECT_NEAR(gamma_specs(2.0).second.curvatures[0], 1.0, 1e-15);
  EXPECT_THROW(gamma_specs(0.0), DomainError);
}

TEST(CaseIIIModel, StructureResiduals) {
  const MovingFrameModel m = case_iii_model(3.0);
  EXPECT_LT(m.skew_residual, 1e-14);
  EXPECT_LT(m.j_residual, 1e-12);
  EXPECT_LT(m.pmc_residual, 1e-12);
  // Tangent-normal blocks are the shape operators: omega[a](k, 2 + al) = A_al(a, k).
  EXPECT_NEAR(m.omega[0](0, 2), m.data.a3(0, 0), 1e-14);
  EXPECT_NEAR(m.omega[1](1, 3), m.data.a4(1, 1), 1e-14);
  EXPECT_NEAR(m.omega[0](1, 4), m.data.a5(0, 1), 1e-14);
}

TEST(CaseIIIModel, InitialStateIsAdapted) {
  const FrameODEState s = case_iii_initial_state(3.0);
  EXPECT_NEAR(s.z.norm(), 2.0 / std::sqrt(3.0), 1e-15);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(std::abs(s.z.dot(s.e[i])), 0.0, 1e-15);
    for (int j = 0; j < 6; ++j) EXPECT_NEAR(re_inner(s.e[i], s.e[j]), i == j ? 1.0 : 0.0, 1e-15);
  }
  const MovingFrameModel m = case_iii_model(3.0);
  for (int i = 0; i < 6; ++i) {
    ComplexVector je = ComplexVector::Zero(4);
    for (int j = 0; j < 6; ++j) je += m.j(i, j) * s.e[j];
    EXPECT_NEAR((je - jmul(s.e[i])).norm(), 0.0, 1e-14);
  }
}

TEST(CaseIIIModel, CorruptedConnectionDoesNotCommute) {
  // The integrability check detects a connection that violates the structure equations.
  MovingFrameModel m = case_iii_model(3.0);
  const FrameODEState s0 = case_iii_initial_state(3.0);
  auto mismatch = [&](const MovingFrameModel& mm) {
    const FrameODEState a = flow(mm, 1, flow(mm, 0, s0, 0.5, 1e-3), 0.5, 1e-3);
    const FrameODEState b = flow(mm, 0, flow(mm, 1, s0, 0.5, 1e-3), 0.5, 1e-3);
    return (a.z - b.z).norm();
  };
  EXPECT_LT(mismatch(m), 1e-8);
  m.omega[0](2, 4) += 0.3;
  m.omega[0](4, 2) -= 0.3;
  EXPECT_GT(mismatch(m), 1e-3);
}

TEST(CaseIIISurface, Properties) {
  const CaseIIISurface s = case_iii_surface(3.0);
  EXPECT_LT(s.commutativity, 1e-5);
  EXPECT_LT(s.generator_consistency, 1e-12);
  EXPECT_LT(s.generator_commutator, 1e-12);
  EXPECT_LT(s.rk4_vs_exact, 1e-8);
  EXPECT_LT(s.frame_defect, 1e-8);
  EXPECT_GT(s.extent, 0.0);
  EXPECT_EQ(s.samples.size(), static_cast<std::size_t>((s.nodes + 1) * (s.nodes + 1)));
  for (const auto& p : sample_points(s.chart.domain, Grid{3, 3})) {
    const FundamentalData d = fundamental_data(s.chart, p.u, p.v);
    EXPECT_NEAR(d.k_intrinsic, 0.0, 1e-9);
    EXPECT_NEAR(d.h.squaredNorm(), 1.0, 1e-10);
    EXPECT_NEAR(d.t_frame.squaredNorm(), 4.0 / 9.0, 1e-10);
    EXPECT_LT(d.dperp_h[0].norm() + d.dperp_h[1].norm(), 1e-9);
  }
  EXPECT_THROW(case_iii_surface(0.0), DomainError);
}

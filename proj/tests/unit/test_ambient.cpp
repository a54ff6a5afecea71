#include "cpbih/ambient.hpp"

#include "cpbih/error.hpp"
#include "test_support.hpp"

using namespace cpbih;
using cpbih::test::basis;
using cpbih::test::random_vector;

TEST(ReInner, Examples) {
  const ComplexVector e1 = basis(2, 1);
  EXPECT_EQ(re_inner(e1, jmul(e1)), 0.0);
  EXPECT_EQ(re_inner(e1, e1), 1.0);
  EXPECT_EQ(re_inner(basis(2, 1, Complex(1, 1)), e1), 1.0);
}

TEST(ReInner, LengthMismatchThrows) {
  EXPECT_THROW(re_inner(ComplexVector::Zero(2), ComplexVector::Zero(3)), DimensionError);
}

TEST(ReInner, SymmetricAndPositive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexVector u = random_vector(rng, 4), v = random_vector(rng, 4);
    EXPECT_DOUBLE_EQ(re_inner(u, v), re_inner(v, u));
    EXPECT_GT(re_inner(u, u), 0.0);
    // Oracle: the real inner product on R^{2n+2}.
    double flat = 0.0;
    for (int k = 0; k < 4; ++k) flat += u[k].real() * v[k].real() + u[k].imag() * v[k].imag();
    EXPECT_NEAR(re_inner(u, v), flat, 1e-13);
  }
  EXPECT_EQ(re_inner(ComplexVector::Zero(3), ComplexVector::Zero(3)), 0.0);
}

TEST(Jmul, ComplexStructure) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexVector u = random_vector(rng, 3), v = random_vector(rng, 3);
    EXPECT_LT((jmul(jmul(u)) + u).norm(), 1e-15);
    EXPECT_NEAR(re_inner(jmul(u), jmul(v)), re_inner(u, v), 1e-14);
    EXPECT_NEAR(re_inner(jmul(u), u), 0.0, 1e-14);
  }
}

TEST(SphereNormalize, Examples) {
  ComplexVector z(2);
  z << Complex(3, 0), Complex(0, 4);
  EXPECT_NEAR(sphere_normalize(z, 4.0).z().norm(), 1.0, 1e-15);

  const SphereLift p = sphere_normalize(basis(2, 0), 1.0);
  EXPECT_NEAR(std::abs(p.z()[0] - Complex(2.0, 0.0)), 0.0, 1e-15);
  EXPECT_EQ(p.z()[1], Complex(0.0, 0.0));
  EXPECT_EQ(p.rho(), 1.0);

  EXPECT_THROW(sphere_normalize(ComplexVector::Zero(2), 4.0), DegenerateError);
  EXPECT_THROW(sphere_normalize(basis(2, 0), 0.0), DomainError);
  ComplexVector bad = basis(2, 0);
  bad[1] = Complex(std::nan(""), 0.0);
  EXPECT_THROW(sphere_normalize(bad, 4.0), DegenerateError);
}

TEST(SphereNormalize, RadiusInvariant) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> rho_dist(0.1, 20.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double rho = rho_dist(rng);
    const SphereLift s = sphere_normalize(random_vector(rng, 4), rho);
    EXPECT_NEAR(re_inner(s.z(), s.z()), 4.0 / rho, 1e-12 * 4.0 / rho);
  }
  EXPECT_DOUBLE_EQ(sphere_radius(4.0), 1.0);
}

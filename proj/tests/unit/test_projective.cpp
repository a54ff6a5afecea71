#include "cpbih/projective.hpp"

#include "cpbih/error.hpp"
#include "test_support.hpp"

using namespace cpbih;
using cpbih::test::basis;
using cpbih::test::random_vector;

namespace {

struct Plane {
  SphereLift z;
  ComplexVector x;
  ComplexVector y;
};

// Orthonormal horizontal pair at a random point; y is J x when holomorphic,
// otherwise orthogonal to both x and J x.
Plane random_plane(std::mt19937_64& rng, double rho, bool holomorphic) {
  const SphereLift z = sphere_normalize(random_vector(rng, 4), rho);
  ComplexVector x = horizontal_part(z.z(), random_vector(rng, 4));
  x /= x.norm();
  ComplexVector y = jmul(x);
  if (!holomorphic) {
    y = horizontal_part(z.z(), random_vector(rng, 4));
    y -= re_inner(y, x) * x + re_inner(y, jmul(x)) * jmul(x);
    y /= y.norm();
  }
  return {z, x, y};
}

}  // namespace

TEST(HorizontalProject, Examples) {
  std::mt19937_64 rng(21);
  const SphereLift z = sphere_normalize(random_vector(rng, 3), 4.0);
  EXPECT_LT(horizontal_project(z, z.z()).w().norm(), 1e-14);
  EXPECT_LT(horizontal_project(z, jmul(z.z())).w().norm(), 1e-14);
  const ComplexVector h = horizontal_part(z.z(), random_vector(rng, 3));
  EXPECT_LT((horizontal_project(z, h).w() - h).norm(), 1e-14);
  EXPECT_LT(horizontality_defect(z.z(), h), 1e-14);
}

TEST(CurvatureTensor, HolomorphicPlane) {
  std::mt19937_64 rng(22);
  for (double rho : {1.0, 3.0, 4.0}) {
    const Plane p = random_plane(rng, rho, true);
    const ComplexVector r = curvature(rho, p.x, p.y, p.y);
    EXPECT_LT((r - rho * p.x).norm(), 1e-12);
    EXPECT_NEAR(sectional_curvature(rho, p.x, p.y), rho, 1e-12);
  }
}

TEST(CurvatureTensor, TotallyRealPlane) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Plane p = random_plane(rng, 3.0, false);
    EXPECT_LT((curvature(3.0, p.x, p.y, p.y) - 0.75 * p.x).norm(), 1e-12);
    EXPECT_NEAR(sectional_curvature(3.0, p.x, p.y), 0.75, 1e-12);
  }
}

TEST(CurvatureTensor, SectionalRangeAndSymmetries) {
  // K(X, Y) = (rho/4)(1 + 3 <X, JY>^2) for orthonormal X, Y.
  std::mt19937_64 rng(24);
  const double rho = 2.5;
  for (int trial = 0; trial < 50; ++trial) {
    const SphereLift z = sphere_normalize(random_vector(rng, 4), rho);
    ComplexVector x = horizontal_part(z.z(), random_vector(rng, 4));
    ComplexVector y = horizontal_part(z.z(), random_vector(rng, 4));
    x /= x.norm();
    y -= re_inner(y, x) * x;
    y /= y.norm();
    const double c = re_inner(x, jmul(y));
    EXPECT_NEAR(sectional_curvature(rho, x, y), rho / 4.0 * (1.0 + 3.0 * c * c), 1e-12);

    const ComplexVector a = horizontal_part(z.z(), random_vector(rng, 4));
    const ComplexVector b = horizontal_part(z.z(), random_vector(rng, 4));
    const ComplexVector w = horizontal_part(z.z(), random_vector(rng, 4));
    const ComplexVector bianchi = curvature(rho, a, b, w) + curvature(rho, b, w, a) + curvature(rho, w, a, b);
    EXPECT_LT(bianchi.norm(), 1e-12);
    EXPECT_LT((curvature(rho, a, b, w) + curvature(rho, b, a, w)).norm(), 1e-12);
    // Pair symmetry <R(a,b)w, x> = <R(w,x)a, b>.
    EXPECT_NEAR(re_inner(curvature(rho, a, b, w), x), re_inner(curvature(rho, w, x, a), b), 1e-12);
    // R commutes with J (Kahler).
    EXPECT_LT((curvature(rho, a, b, jmul(w)) - jmul(curvature(rho, a, b, w))).norm(), 1e-12);
  }
}

TEST(CurvatureTensor, CheckedVersionRejectsMixedBases) {
  std::mt19937_64 rng(25);
  const SphereLift z1 = sphere_normalize(random_vector(rng, 3), 4.0);
  const SphereLift z2 = sphere_normalize(random_vector(rng, 3), 4.0);
  const TangentVector x = horizontal_project(z1, random_vector(rng, 3));
  const TangentVector y = horizontal_project(z2, random_vector(rng, 3));
  EXPECT_THROW(curvature_tensor(4.0, x, y, x), DomainError);
  EXPECT_THROW(sectional_curvature(4.0, x.w(), 2.0 * x.w()), DomainError);
}

TEST(CovariantDerivative, GeodesicVelocityIsParallel) {
  // Horizontal great circle z(t) = R (cos(t/R) e0 + sin(t/R) e1): a geodesic.
  const double rho = 3.0, r = 2.0 / std::sqrt(rho);
  for (double t : {0.0, 0.4, 1.3}) {
    const ComplexVector z = r * (std::cos(t / r) * basis(3, 0) + std::sin(t / r) * basis(3, 1));
    const ComplexVector dz = -std::sin(t / r) * basis(3, 0) + std::cos(t / r) * basis(3, 1);
    const ComplexVector ddz = -(1.0 / r) * (std::cos(t / r) * basis(3, 0) + std::sin(t / r) * basis(3, 1));
    EXPECT_LT(covariant_derivative(z, dz, dz, ddz).norm(), 1e-14);
  }
}

TEST(CovariantDerivative, GaugeCovariant) {
  // Rephasing the lift by e^{i phi(t)} must rephase the result.
  std::mt19937_64 rng(26);
  const ComplexVector z0 = sphere_normalize(random_vector(rng, 3), 4.0).z();
  const ComplexVector dz = horizontal_part(z0, random_vector(rng, 3));
  const ComplexVector y = horizontal_part(z0, random_vector(rng, 3));
  const ComplexVector dy = random_vector(rng, 3);
  const ComplexVector base = covariant_derivative(z0, dz, y, dy);
  const double phi = 0.7, dphi = 1.9;
  const Complex e = std::exp(Complex(0, phi));
  const Complex ie = Complex(0, dphi) * e;
  const ComplexVector moved = covariant_derivative(e * z0, e * dz + ie * z0, e * y, e * dy + ie * y);
  EXPECT_LT((moved - e * base).norm(), 1e-13);
}

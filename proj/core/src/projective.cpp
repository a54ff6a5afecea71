#include "cpbih/projective.hpp"

#include <algorithm>
#include <cmath>

namespace cpbih {

bool gauge_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
  const ComplexVector& za = a.lift().z();
  const ComplexVector& zb = b.lift().z();
  if (za.size() != zb.size()) return false;
  // The optimal phase aligns zb with za; the residual is then
  // |za|^2 + |zb|^2 - 2|<za,zb>|.
  const Complex h = zb.dot(za);  // sum conj(zb_k) za_k
  const double gap = za.squaredNorm() + zb.squaredNorm() - 2.0 * std::abs(h);
  return std::sqrt(std::max(gap, 0.0)) <= tol;
}

ComplexVector horizontal_part(const ComplexVector& z, const ComplexVector& w) {
  if (z.size() != w.size()) throw DimensionError("horizontal_part: length mismatch");
  const double nz2 = z.squaredNorm();
  if (!(nz2 > 0.0)) throw DegenerateError("horizontal_part: zero base vector");
  const Complex c = z.dot(w) / nz2;  // sum conj(z_k) w_k
  return w - c * z;
}

TangentVector horizontal_project(const SphereLift& z, const ComplexVector& w) {
  return TangentVector(ProjectivePoint(z), horizontal_part(z.z(), w));
}

ComplexVector curvature(double rho, const ComplexVector& x, const ComplexVector& y,
                        const ComplexVector& z) {
  const ComplexVector jx = jmul(x), jy = jmul(y), jz = jmul(z);
  return (rho / 4.0) * (re_inner(y, z) * x - re_inner(x, z) * y + re_inner(jy, z) * jx -
                        re_inner(jx, z) * jy + 2.0 * re_inner(x, jy) * jz);
}

namespace {

void require_same_base(const TangentVector& a, const TangentVector& b) {
  const ComplexVector& za = a.base().lift().z();
  const ComplexVector& zb = b.base().lift().z();
  if (za.size() != zb.size() || (za - zb).norm() > 1e-12 * std::max(1.0, za.norm())) {
    throw DomainError("tangent vectors are based at different lifts");
  }
}

}  // namespace

TangentVector curvature_tensor(double rho, const TangentVector& x, const TangentVector& y,
                               const TangentVector& z) {
  require_same_base(x, y);
  require_same_base(x, z);
  return TangentVector(x.base(), curvature(rho, x.w(), y.w(), z.w()));
}

double sectional_curvature(double rho, const ComplexVector& x, const ComplexVector& y) {
  const double xx = re_inner(x, x), yy = re_inner(y, y), xy = re_inner(x, y);
  const double area2 = xx * yy - xy * xy;
  if (!(area2 > 1e-14 * xx * yy) || !(xx > 0.0)) {
    throw DomainError("sectional_curvature: vectors do not span a plane");
  }
  return re_inner(curvature(rho, x, y, y), x) / area2;
}

double sectional_curvature(double rho, const TangentVector& x, const TangentVector& y) {
  require_same_base(x, y);
  return sectional_curvature(rho, x.w(), y.w());
}

ComplexVector covariant_derivative(const ComplexVector& z, const ComplexVector& dz,
                                   const ComplexVector& y, const ComplexVector& dy) {
  const double lambda = re_inner(dz, jmul(z)) / z.squaredNorm();
  return horizontal_part(z, dy) - lambda * jmul(y);
}

double horizontality_defect(const ComplexVector& z, const ComplexVector& w) {
  const double nz = z.norm();
  return std::max(std::abs(re_inner(w, z)), std::abs(re_inner(w, jmul(z)))) / nz;
}

}  // namespace cpbih

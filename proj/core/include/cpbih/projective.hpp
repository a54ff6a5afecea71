#pragma once

/**
 * @file projective.hpp
 * @brief Fubini-Study geometry of CP^n(rho) through the Hopf fibration
 *        S^{2n+1}(rho/4) -> CP^n(rho).
 *
 * Tangent vectors of CP^n at pi(z) are represented by their horizontal lifts
 * at z: vectors w with <w, z> = <w, iz> = 0. The complex structure acts as
 * multiplication by i, which preserves horizontality.
 *
 * Along a lifted curve or surface z(t), a horizontal field Y(t) has
 * covariant derivative
 *
 *     nabla_t Y = P_z(dY/dt) - lambda(t) i Y,   lambda = <dz/dt, iz> / |z|^2,
 *
 * where P_z is the complex-orthogonal projection onto z^perp. The P_z term
 * combines the sphere's tangential projection with the O'Neill horizontal
 * projection; the lambda term removes the drift of an equivariant field
 * along the fibre. It vanishes for horizontal lifts and makes the result
 * independent of the gauge z -> e^{i phi} z.
 */

#include "cpbih/ambient.hpp"

namespace cpbih {

class ProjectivePoint {
 public:
  explicit ProjectivePoint(SphereLift lift) : lift_(std::move(lift)) {}
  const SphereLift& lift() const { return lift_; }
  double rho() const { return lift_.rho(); }

 private:
  SphereLift lift_;
};

/// true when the lifts differ by a unit complex phase (within tol).
bool gauge_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol = 1e-12);

class TangentVector {
 public:
  TangentVector(ProjectivePoint base, ComplexVector w) : base_(std::move(base)), w_(std::move(w)) {}
  const ProjectivePoint& base() const { return base_; }
  const ComplexVector& w() const { return w_; }

 private:
  ProjectivePoint base_;
  ComplexVector w_;
};

/// Complex-orthogonal projection of w onto z^perp (removes the z and iz parts).
ComplexVector horizontal_part(const ComplexVector& z, const ComplexVector& w);

/// Horizontal projection at a sphere point.
TangentVector horizontal_project(const SphereLift& z, const ComplexVector& w);

/// Closed-form curvature tensor of CP^n(rho) on horizontal vectors:
/// R(X,Y)Z = rho/4 { <Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY + 2<X,JY>JZ }.
ComplexVector curvature(double rho, const ComplexVector& x, const ComplexVector& y,
                        const ComplexVector& z);

/// Same, checked: all three vectors must share a base point.
TangentVector curvature_tensor(double rho, const TangentVector& x, const TangentVector& y,
                               const TangentVector& z);

/// <R(X,Y)Y, X> / (|X|^2|Y|^2 - <X,Y>^2). Throws DomainError on a degenerate plane.
double sectional_curvature(double rho, const ComplexVector& x, const ComplexVector& y);
double sectional_curvature(double rho, const TangentVector& x, const TangentVector& y);

/// Covariant derivative of a horizontal field Y along a lifted path z,
/// given dz and dY (derivatives with respect to the same parameter).
ComplexVector covariant_derivative(const ComplexVector& z, const ComplexVector& dz,
                                   const ComplexVector& y, const ComplexVector& dy);

/// max(|<w,z>|, |<w,iz>|) / |z|: how far w is from horizontal at z.
double horizontality_defect(const ComplexVector& z, const ComplexVector& w);

}  // namespace cpbih

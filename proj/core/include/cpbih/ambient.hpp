#pragma once

#include <Eigen/Dense>
#include <complex>

#include "cpbih/error.hpp"

namespace cpbih {

using Complex = std::complex<double>;

/// A vector of C^{n+1}; n is a runtime value.
using ComplexVector = Eigen::VectorXcd;

/// Real part of the Hermitian product sum_k u_k conj(v_k).
double re_inner(const ComplexVector& u, const ComplexVector& v);

/// The complex structure: entrywise multiplication by i.
ComplexVector jmul(const ComplexVector& u);

/// Radius 2/sqrt(rho) of the sphere S^{2n+1}(rho/4).
double sphere_radius(double rho);

/// A point of S^{2n+1}(rho/4) in C^{n+1}. Construct with sphere_normalize.
class SphereLift {
 public:
  const ComplexVector& z() const { return z_; }
  double rho() const { return rho_; }
  int dimension() const { return static_cast<int>(z_.size()); }

 private:
  friend SphereLift sphere_normalize(const ComplexVector& z, double rho);
  SphereLift(ComplexVector z, double rho) : z_(std::move(z)), rho_(rho) {}

  ComplexVector z_;
  double rho_;
};

/// Rescales z onto the sphere of radius 2/sqrt(rho).
/// Throws DegenerateError for z = 0 and DomainError for rho <= 0.
SphereLift sphere_normalize(const ComplexVector& z, double rho);

/// true when every entry is finite.
bool all_finite(const ComplexVector& u);

}  // namespace cpbih

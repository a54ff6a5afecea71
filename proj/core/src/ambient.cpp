#include "cpbih/ambient.hpp"

#include <cmath>
#include <string>

namespace cpbih {

double re_inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    throw DimensionError("re_inner: length mismatch (" + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()) + ")");
  }
  double s = 0.0;
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    s += u[k].real() * v[k].real() + u[k].imag() * v[k].imag();
  }
  return s;
}

ComplexVector jmul(const ComplexVector& u) { return u * Complex(0.0, 1.0); }

double sphere_radius(double rho) {
  if (!(rho > 0.0)) throw DomainError("sphere radius requires rho > 0");
  return 2.0 / std::sqrt(rho);
}

SphereLift sphere_normalize(const ComplexVector& z, double rho) {
  if (!(rho > 0.0)) throw DomainError("sphere_normalize: rho must be positive");
  const double norm = z.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DegenerateError("sphere_normalize: zero or non-finite vector");
  }
  return SphereLift(z * (sphere_radius(rho) / norm), rho);
}

bool all_finite(const ComplexVector& u) {
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    if (!std::isfinite(u[k].real()) || !std::isfinite(u[k].imag())) return false;
  }
  return true;
}

}  // namespace cpbih

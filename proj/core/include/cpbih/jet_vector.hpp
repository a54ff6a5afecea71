#pragma once

#include <cmath>
#include <vector>

#include "cpbih/ambient.hpp"
#include "cpbih/jet.hpp"

namespace cpbih {

/// A vector of C^{n+1} whose entries are complex jets.
template <int N>
class JetVec {
 public:
  using Scalar = CJet<N>;

  JetVec() = default;
  explicit JetVec(int dim) : e_(static_cast<std::size_t>(dim)) {}
  explicit JetVec(std::vector<Scalar> entries) : e_(std::move(entries)) {}

  /// Constant jet vector.
  static JetVec constant(const ComplexVector& w) {
    JetVec r(static_cast<int>(w.size()));
    for (int k = 0; k < r.size(); ++k) r[k] = Scalar(w[k]);
    return r;
  }

  int size() const { return static_cast<int>(e_.size()); }
  Scalar& operator[](int k) { return e_[static_cast<std::size_t>(k)]; }
  const Scalar& operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }

  ComplexVector value() const {
    ComplexVector w(size());
    for (int k = 0; k < size(); ++k) w[k] = e_[k].value();
    return w;
  }

  /// d^{i+j}/du^i dv^j of every entry.
  ComplexVector derivative(int i, int j) const {
    ComplexVector w(size());
    for (int k = 0; k < size(); ++k) w[k] = e_[k].derivative(i, j);
    return w;
  }

  JetVec partial(int axis) const {
    JetVec r(size());
    for (int k = 0; k < size(); ++k) r[k] = e_[k].partial(axis);
    return r;
  }

  JetVec& operator+=(const JetVec& o) {
    for (int k = 0; k < size(); ++k) e_[k] += o[k];
    return *this;
  }
  JetVec& operator-=(const JetVec& o) {
    for (int k = 0; k < size(); ++k) e_[k] -= o[k];
    return *this;
  }
  friend JetVec operator+(JetVec a, const JetVec& b) { return a += b; }
  friend JetVec operator-(JetVec a, const JetVec& b) { return a -= b; }
  friend JetVec operator-(const JetVec& a) {
    JetVec r(a.size());
    for (int k = 0; k < a.size(); ++k) r[k] = -a[k];
    return r;
  }

  friend JetVec operator*(const RJet<N>& s, const JetVec& a) {
    JetVec r(a.size());
    for (int k = 0; k < a.size(); ++k) r[k] = s * a[k];
    return r;
  }
  friend JetVec operator*(const CJet<N>& s, const JetVec& a) {
    JetVec r(a.size());
    for (int k = 0; k < a.size(); ++k) r[k] = s * a[k];
    return r;
  }
  friend JetVec operator*(double s, const JetVec& a) {
    JetVec r(a.size());
    for (int k = 0; k < a.size(); ++k) r[k] = Complex(s) * a[k];
    return r;
  }

 private:
  std::vector<Scalar> e_;
};

/// Hermitian product sum_k a_k conj(b_k).
template <int N>
CJet<N> herm(const JetVec<N>& a, const JetVec<N>& b) {
  CJet<N> s;
  for (int k = 0; k < a.size(); ++k) s += a[k] * conj(b[k]);
  return s;
}

template <int N>
RJet<N> re_inner(const JetVec<N>& a, const JetVec<N>& b) {
  RJet<N> s;
  for (int k = 0; k < a.size(); ++k) {
    s += real(a[k]) * real(b[k]) + imag(a[k]) * imag(b[k]);
  }
  return s;
}

template <int N>
JetVec<N> jmul(const JetVec<N>& a) {
  JetVec<N> r(a.size());
  for (int k = 0; k < a.size(); ++k) r[k] = Complex(0.0, 1.0) * a[k];
  return r;
}

/// Complex matrix times jet vector.
template <int N>
JetVec<N> apply(const Eigen::MatrixXcd& m, const JetVec<N>& a) {
  JetVec<N> r(static_cast<int>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int k = 0; k < a.size(); ++k) {
      if (m(i, k) != Complex(0.0)) r[i] += m(i, k) * a[k];
    }
  }
  return r;
}

template <int N>
bool all_finite(const JetVec<N>& a) {
  for (int k = 0; k < a.size(); ++k) {
    for (const auto& c : a[k].coefficients()) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
  }
  return true;
}

}  // namespace cpbih

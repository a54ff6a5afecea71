#pragma once

/**
 * @file jet.hpp
 * @brief Truncated bivariate Taylor arithmetic.
 *
 * A Jet<T, N> holds the Taylor coefficients of a function of two parameters
 * (u, v) about a base point, truncated at total degree N:
 *
 *     f(u0 + du, v0 + dv) = sum_{i+j<=N} c(i, j) du^i dv^j
 *
 * Arithmetic propagates the coefficients exactly, so partial derivatives of
 * any composite expression are obtained without differencing:
 *
 * @code
 * auto u = RJet<3>::variable(0.5, 0);
 * auto v = RJet<3>::variable(0.2, 1);
 * auto f = exp(u * v) / (1.0 + u * u);
 * double fuuv = f.derivative(2, 1);
 * @endcode
 *
 * T is double or std::complex<double>. Transcendental functions are provided
 * for real jets; complex jets support the field operations and exp.
 */

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

namespace cpbih {

using Complex = std::complex<double>;

namespace detail {

constexpr int jet_size(int order) { return (order + 1) * (order + 2) / 2; }

constexpr int jet_index(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }

constexpr double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

}  // namespace detail

template <class T, int N>
class Jet {
  static_assert(N >= 0, "jet order must be non-negative");

 public:
  using value_type = T;
  static constexpr int kOrder = N;
  static constexpr int kSize = detail::jet_size(N);

  constexpr Jet() : c_{} {}
  constexpr Jet(T constant) : c_{} { c_[0] = constant; }  // NOLINT: implicit on purpose

  /// Jet of the coordinate function: value x0, unit slope along `axis` (0 = u, 1 = v).
  static Jet variable(double x0, int axis) {
    Jet r{T(x0)};
    if constexpr (N >= 1) r.c_[axis == 0 ? detail::jet_index(1, 0) : detail::jet_index(0, 1)] = T(1);
    return r;
  }

  T value() const { return c_[0]; }
  T coeff(int i, int j) const { return c_[detail::jet_index(i, j)]; }
  T& coeff(int i, int j) { return c_[detail::jet_index(i, j)]; }

  /// The partial derivative d^{i+j} / du^i dv^j at the base point.
  T derivative(int i, int j) const {
    return coeff(i, j) * detail::factorial(i) * detail::factorial(j);
  }

  /// Jet of the partial derivative along `axis`. The degree-N coefficients
  /// of the result are unknown and set to zero, so the result is exact
  /// through degree N-1 only.
  Jet partial(int axis) const {
    Jet r;
    for (int d = 0; d < N; ++d) {
      for (int j = 0; j <= d; ++j) {
        const int i = d - j;
        if (axis == 0) {
          r.coeff(i, j) = T(i + 1) * coeff(i + 1, j);
        } else {
          r.coeff(i, j) = T(j + 1) * coeff(i, j + 1);
        }
      }
    }
    return r;
  }

  /// Jet with the constant term removed (nilpotent part).
  Jet increment() const {
    Jet r = *this;
    r.c_[0] = T(0);
    return r;
  }

  const std::array<T, kSize>& coefficients() const { return c_; }

  Jet operator-() const {
    Jet r;
    for (int k = 0; k < kSize; ++k) r.c_[k] = -c_[k];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, const T& s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet operator+(const T& s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, const T& s) {
    a.c_[0] -= s;
    return a;
  }
  friend Jet operator-(const T& s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(Jet a, const T& s) { return a *= s; }
  friend Jet operator*(const T& s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, const T& s) { return a *= (T(1) / s); }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int d1 = 0; d1 <= N; ++d1) {
      for (int j1 = 0; j1 <= d1; ++j1) {
        const T x = a.coeff(d1 - j1, j1);
        if (x == T(0)) continue;
        for (int d2 = 0; d1 + d2 <= N; ++d2) {
          for (int j2 = 0; j2 <= d2; ++j2) {
            r.coeff(d1 - j1 + d2 - j2, j1 + j2) += x * b.coeff(d2 - j2, j2);
          }
        }
      }
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
  friend Jet operator/(const T& s, const Jet& b) { return s * reciprocal(b); }

  /// f(x0 + h) = sum_k d[k] / k! h^k, where d[k] = f^(k)(x0) and h is the
  /// nilpotent part of this jet.
  Jet compose(const std::array<T, N + 1>& d) const {
    const Jet h = increment();
    Jet r(d[N] / T(detail::factorial(N)));
    for (int k = N - 1; k >= 0; --k) {
      r = r * h + d[k] / T(detail::factorial(k));
    }
    return r;
  }

  friend Jet reciprocal(const Jet& x) {
    std::array<T, N + 1> d{};
    const T inv = T(1) / x.value();
    T p = inv;
    for (int k = 0; k <= N; ++k) {
      d[k] = p;
      p *= -T(k + 1) * inv;
    }
    return x.compose(d);
  }

  friend Jet exp(const Jet& x) {
    std::array<T, N + 1> d{};
    d.fill(std::exp(x.value()));
    return x.compose(d);
  }

 private:
  std::array<T, kSize> c_;
};

template <int N>
using RJet = Jet<double, N>;
template <int N>
using CJet = Jet<Complex, N>;

// Mixed real/complex products.
template <int N>
CJet<N> operator*(const RJet<N>& a, const CJet<N>& b) {
  CJet<N> r;
  for (int d1 = 0; d1 <= N; ++d1) {
    for (int j1 = 0; j1 <= d1; ++j1) {
      const double x = a.coeff(d1 - j1, j1);
      if (x == 0.0) continue;
      for (int d2 = 0; d1 + d2 <= N; ++d2) {
        for (int j2 = 0; j2 <= d2; ++j2) {
          r.coeff(d1 - j1 + d2 - j2, j1 + j2) += x * b.coeff(d2 - j2, j2);
        }
      }
    }
  }
  return r;
}
template <int N>
CJet<N> operator*(const CJet<N>& b, const RJet<N>& a) {
  return a * b;
}
template <int N>
CJet<N> operator*(const RJet<N>& a, const Complex& s) {
  CJet<N> r;
  for (int d = 0; d <= N; ++d)
    for (int j = 0; j <= d; ++j) r.coeff(d - j, j) = a.coeff(d - j, j) * s;
  return r;
}
template <int N>
CJet<N> operator*(const Complex& s, const RJet<N>& a) {
  return a * s;
}

template <int N>
CJet<N> complexify(const RJet<N>& re, const RJet<N>& im = RJet<N>()) {
  CJet<N> r;
  for (int d = 0; d <= N; ++d)
    for (int j = 0; j <= d; ++j) r.coeff(d - j, j) = Complex(re.coeff(d - j, j), im.coeff(d - j, j));
  return r;
}

template <int N>
RJet<N> real(const CJet<N>& z) {
  RJet<N> r;
  for (int d = 0; d <= N; ++d)
    for (int j = 0; j <= d; ++j) r.coeff(d - j, j) = z.coeff(d - j, j).real();
  return r;
}

template <int N>
RJet<N> imag(const CJet<N>& z) {
  RJet<N> r;
  for (int d = 0; d <= N; ++d)
    for (int j = 0; j <= d; ++j) r.coeff(d - j, j) = z.coeff(d - j, j).imag();
  return r;
}

template <int N>
CJet<N> conj(const CJet<N>& z) {
  CJet<N> r;
  for (int d = 0; d <= N; ++d)
    for (int j = 0; j <= d; ++j) r.coeff(d - j, j) = std::conj(z.coeff(d - j, j));
  return r;
}

/// e^{i x} for a real jet x.
template <int N>
CJet<N> expi(const RJet<N>& x) {
  return exp(complexify(RJet<N>(), x));
}

// Real transcendental functions.

template <int N>
RJet<N> sqrt(const RJet<N>& x) {
  std::array<double, N + 1> d{};
  const double x0 = x.value();
  double coef = 1.0;
  for (int k = 0; k <= N; ++k) {
    d[k] = coef * std::pow(x0, 0.5 - k);
    coef *= (0.5 - k);
  }
  return x.compose(d);
}

template <int N>
RJet<N> pow(const RJet<N>& x, double p) {
  std::array<double, N + 1> d{};
  const double x0 = x.value();
  double coef = 1.0;
  for (int k = 0; k <= N; ++k) {
    d[k] = coef * std::pow(x0, p - k);
    coef *= (p - k);
  }
  return x.compose(d);
}

template <int N>
RJet<N> log(const RJet<N>& x) {
  std::array<double, N + 1> d{};
  const double x0 = x.value();
  d[0] = std::log(x0);
  double p = 1.0 / x0;
  for (int k = 1; k <= N; ++k) {
    d[k] = p;
    p *= -double(k) / x0;
  }
  return x.compose(d);
}

template <int N>
RJet<N> sin(const RJet<N>& x) {
  std::array<double, N + 1> d{};
  const double s = std::sin(x.value()), c = std::cos(x.value());
  const double cyc[4] = {s, c, -s, -c};
  for (int k = 0; k <= N; ++k) d[k] = cyc[k % 4];
  return x.compose(d);
}

template <int N>
RJet<N> cos(const RJet<N>& x) {
  std::array<double, N + 1> d{};
  const double s = std::sin(x.value()), c = std::cos(x.value());
  const double cyc[4] = {c, -s, -c, s};
  for (int k = 0; k <= N; ++k) d[k] = cyc[k % 4];
  return x.compose(d);
}

// Plain-double overloads so chart formulas can be written once for both
// scalars and jets.
inline Complex expi(double x) { return std::polar(1.0, x); }

template <class S>
struct complex_of {
  using type = Complex;
};
template <int N>
struct complex_of<RJet<N>> {
  using type = CJet<N>;
};
template <class S>
using complex_of_t = typename complex_of<S>::type;

}  // namespace cpbih

#pragma once

/**
 * @file calculus.hpp
 * @brief Parameter maps (u, v) -> C^{n+1} with exact jets and a
 *        finite-difference cross-check.
 */

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cpbih/ambient.hpp"
#include "cpbih/jet_vector.hpp"

namespace cpbih {

/// Highest jet order a ParamMap can be evaluated at.
inline constexpr int kMaxJetOrder = 5;

/**
 * A smooth map from a planar parameter domain into C^{n+1}.
 *
 * The map is stored once per supported jet order, each instantiated from
 * the same generic callable. The callable receives two RJet<N> coordinates
 * and returns std::vector<CJet<N>>; write it with `auto` parameters so the
 * same formula serves every order:
 *
 * @code
 * ParamMap f(2, [](const auto& u, const auto& v) {
 *   using C = complex_of_t<std::decay_t<decltype(u)>>;
 *   return std::vector<C>{C(1.0), expi(u + 2.0 * v)};
 * });
 * @endcode
 */
class ParamMap {
 public:
  template <int N>
  using Fn = std::function<JetVec<N>(const RJet<N>&, const RJet<N>&)>;

  template <class F>
  ParamMap(int dimension, F f)
      : dim_(dimension),
        fns_(wrap<0>(f), wrap<1>(f), wrap<2>(f), wrap<3>(f), wrap<4>(f), wrap<5>(f)) {}

  /// Complex dimension n+1 of the target.
  int dimension() const { return dim_; }

  template <int N>
  JetVec<N> jet(const RJet<N>& u, const RJet<N>& v) const {
    static_assert(N <= kMaxJetOrder);
    return std::get<N>(fns_)(u, v);
  }

  /// Jet of order N about (u, v).
  template <int N>
  JetVec<N> jet_at(double u, double v) const {
    return jet<N>(RJet<N>::variable(u, 0), RJet<N>::variable(v, 1));
  }

  ComplexVector operator()(double u, double v) const { return jet_at<0>(u, v).value(); }

 private:
  template <int N, class F>
  static Fn<N> wrap(F f) {
    return [f](const RJet<N>& u, const RJet<N>& v) { return JetVec<N>(f(u, v)); };
  }

  int dim_;
  std::tuple<Fn<0>, Fn<1>, Fn<2>, Fn<3>, Fn<4>, Fn<5>> fns_;
};

/// A real polynomial sum c_{ij} u^i v^j, used as a gauge phase.
struct Polynomial2 {
  struct Term {
    int i;
    int j;
    double coefficient;
  };
  std::vector<Term> terms;

  template <class S>
  S operator()(const S& u, const S& v) const {
    S r(0.0);
    for (const auto& t : terms) {
      S m(t.coefficient);
      for (int k = 0; k < t.i; ++k) m = m * u;
      for (int k = 0; k < t.j; ++k) m = m * v;
      r = r + m;
    }
    return r;
  }
};

/// e^{i phase(u,v)} f(u,v).
ParamMap regauge(const ParamMap& f, const Polynomial2& phase);

/// (u, v) -> f(v, u).
ParamMap swap_parameters(const ParamMap& f);

/// Value and all partial derivatives through order three.
struct Jet3 {
  ComplexVector value;
  std::array<ComplexVector, 2> first;   ///< d_u, d_v
  std::array<ComplexVector, 3> second;  ///< d_uu, d_uv, d_vv
  std::array<ComplexVector, 4> third;   ///< d_uuu, d_uuv, d_uvv, d_vvv
};

/// Exact partials through order three. Throws EvaluationError on non-finite output.
Jet3 jet3_eval(const ParamMap& f, double u, double v);

/// Central-difference partials of the requested order (1, 2 or 3); error O(h^2).
/// Lower-order slots are filled as well. Entries above `order` are left empty.
struct FdPartials {
  Jet3 partials;
  int order = 0;
  double step = 0.0;
  std::string warning;  ///< non-empty when the step is too small to trust
};

FdPartials fd_oracle(const ParamMap& f, double u, double v, int order, double h = 1e-4);

/// Default oracle step.
inline constexpr double kDefaultFdStep = 1e-4;

}  // namespace cpbih

#include "cpbih/calculus.hpp"

#include <cmath>
#include <sstream>

namespace cpbih {

ParamMap regauge(const ParamMap& f, const Polynomial2& phase) {
  return ParamMap(f.dimension(), [f, phase](const auto& u, const auto& v) {
    constexpr int N = std::decay_t<decltype(u)>::kOrder;
    const CJet<N> g = expi(phase(u, v));
    JetVec<N> w = f.jet<N>(u, v);
    std::vector<CJet<N>> out(static_cast<std::size_t>(w.size()));
    for (int k = 0; k < w.size(); ++k) out[k] = g * w[k];
    return out;
  });
}

ParamMap swap_parameters(const ParamMap& f) {
  return ParamMap(f.dimension(), [f](const auto& u, const auto& v) {
    constexpr int N = std::decay_t<decltype(u)>::kOrder;
    JetVec<N> w = f.jet<N>(v, u);
    std::vector<CJet<N>> out(static_cast<std::size_t>(w.size()));
    for (int k = 0; k < w.size(); ++k) out[k] = w[k];
    return out;
  });
}

Jet3 jet3_eval(const ParamMap& f, double u, double v) {
  const JetVec<3> j = f.jet_at<3>(u, v);
  if (!all_finite(j)) {
    std::ostringstream os;
    os << "jet3_eval: map is not differentiable at (" << u << ", " << v << ")";
    throw EvaluationError(os.str());
  }
  Jet3 r;
  r.value = j.value();
  r.first = {j.derivative(1, 0), j.derivative(0, 1)};
  r.second = {j.derivative(2, 0), j.derivative(1, 1), j.derivative(0, 2)};
  r.third = {j.derivative(3, 0), j.derivative(2, 1), j.derivative(1, 2), j.derivative(0, 3)};
  return r;
}

FdPartials fd_oracle(const ParamMap& f, double u, double v, int order, double h) {
  if (order < 1 || order > 3) throw DomainError("fd_oracle: order must be 1, 2 or 3");
  if (!(h > 0.0)) throw DomainError("fd_oracle: step must be positive");

  FdPartials out;
  out.order = order;
  out.step = h;
  if (h < 1e-10) out.warning = "step below 1e-10: round-off dominates the difference quotients";

  auto at = [&](double du, double dv) { return f(u + du * h, v + dv * h); };

  const ComplexVector c = at(0, 0);
  out.partials.value = c;

  const ComplexVector pu = at(1, 0), mu = at(-1, 0), pv = at(0, 1), mv = at(0, -1);
  out.partials.first = {(pu - mu) / (2 * h), (pv - mv) / (2 * h)};
  if (order == 1) return out;

  const ComplexVector pp = at(1, 1), pm = at(1, -1), mp = at(-1, 1), mm = at(-1, -1);
  const double h2 = h * h;
  out.partials.second = {(pu - 2.0 * c + mu) / h2, (pp - pm - mp + mm) / (4 * h2),
                         (pv - 2.0 * c + mv) / h2};
  if (order == 2) return out;

  const double h3 = h2 * h;
  const ComplexVector p2u = at(2, 0), m2u = at(-2, 0), p2v = at(0, 2), m2v = at(0, -2);
  // Mixed thirds: centred first difference of a centred second difference.
  const ComplexVector uuv = ((pp - 2.0 * pv + mp) - (pm - 2.0 * mv + mm)) / (2 * h3);
  const ComplexVector uvv = ((pp - 2.0 * pu + pm) - (mp - 2.0 * mu + mm)) / (2 * h3);
  out.partials.third = {(p2u - 2.0 * pu + 2.0 * mu - m2u) / (2 * h3), uuv, uvv,
                        (p2v - 2.0 * pv + 2.0 * mv - m2v) / (2 * h3)};
  return out;
}

}  // namespace cpbih

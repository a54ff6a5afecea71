#include "cpbih/calculus.hpp"

#include "cpbih/error.hpp"
#include "test_support.hpp"

using namespace cpbih;

namespace {

ParamMap cube_map() {
  return ParamMap(2, [](const auto& u, const auto&) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{complexify(u * u * u), C(0.0)};
  });
}

ParamMap phase_map() {
  return ParamMap(2, [](const auto& u, const auto&) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{expi(u), C(0.0)};
  });
}

// A map mixing every elementary function the charts rely on.
ParamMap mixed_map() {
  return ParamMap(3, [](const auto& u, const auto& v) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{complexify(sqrt(2.0 + u * u), sin(v)), expi(u * v + 0.3 * v) * complexify(cos(u)),
                          complexify(log(1.5 + v), u / (2.0 + v * v))};
  });
}

// Closed-form partials of mixed_map()[0] = sqrt(2 + u^2) + i sin v.
Complex d_first(int i, int j, double u, double v) {
  const double s = std::sqrt(2.0 + u * u);
  if (j == 0) {
    if (i == 0) return {s, std::sin(v)};
    if (i == 1) return {u / s, 0.0};
    if (i == 2) return {2.0 / (s * s * s), 0.0};
    if (i == 3) return {-6.0 * u / std::pow(s, 5), 0.0};
  }
  if (i == 0) {
    const double cyc[4] = {std::sin(v), std::cos(v), -std::sin(v), -std::cos(v)};
    return {0.0, cyc[j % 4]};
  }
  return {0.0, 0.0};
}

}  // namespace

TEST(Jet3Eval, Examples) {
  const Jet3 c = jet3_eval(cube_map(), 0.7, -0.2);
  EXPECT_NEAR(std::abs(c.third[0][0] - Complex(6.0, 0.0)), 0.0, 1e-14);
  EXPECT_EQ(c.third[0][1], Complex(0.0, 0.0));

  const Jet3 e = jet3_eval(phase_map(), 0.0, 0.0);
  EXPECT_NEAR(std::abs(e.first[0][0] - Complex(0.0, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.second[0][0] - Complex(-1.0, 0.0)), 0.0, 1e-15);
  EXPECT_EQ(e.first[1][0], Complex(0.0, 0.0));
}

TEST(Jet3Eval, MatchesClosedForm) {
  const ParamMap f = mixed_map();
  for (double u : {-0.8, 0.1, 1.2})
    for (double v : {-0.4, 0.6}) {
      const Jet3 j = jet3_eval(f, u, v);
      EXPECT_NEAR(std::abs(j.value[0] - d_first(0, 0, u, v)), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(j.first[0][0] - d_first(1, 0, u, v)), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(j.first[1][0] - d_first(0, 1, u, v)), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(j.second[0][0] - d_first(2, 0, u, v)), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(j.second[1][0] - d_first(1, 1, u, v)), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(j.third[0][0] - d_first(3, 0, u, v)), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(j.third[3][0] - d_first(0, 3, u, v)), 0.0, 1e-13);
    }
}

TEST(FdOracle, SineExample) {
  const ParamMap f(1, [](const auto& u, const auto&) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{complexify(sin(u))};
  });
  const FdPartials p = fd_oracle(f, 0.0, 0.0, 1, 1e-5);
  EXPECT_NEAR(p.partials.first[0][0].real(), 1.0, 1e-9);
  EXPECT_EQ(p.order, 1);
}

TEST(FdOracle, AgreesWithJetsThroughThirdOrder) {
  const ParamMap f = mixed_map();
  const Jet3 exact = jet3_eval(f, 0.3, 0.2);
  const FdPartials fd = fd_oracle(f, 0.3, 0.2, 3, 1e-3);
  for (int k = 0; k < 2; ++k) EXPECT_LT((fd.partials.first[k] - exact.first[k]).norm(), 1e-6);
  for (int k = 0; k < 3; ++k) EXPECT_LT((fd.partials.second[k] - exact.second[k]).norm(), 1e-5);
  for (int k = 0; k < 4; ++k) EXPECT_LT((fd.partials.third[k] - exact.third[k]).norm(), 1e-4);
}

TEST(FdOracle, RejectsBadArguments) {
  EXPECT_THROW(fd_oracle(mixed_map(), 0.0, 0.0, 4), DomainError);
  EXPECT_THROW(fd_oracle(mixed_map(), 0.0, 0.0, 1, 0.0), DomainError);
  EXPECT_FALSE(fd_oracle(mixed_map(), 0.0, 0.0, 3, 1e-11).warning.empty());
}

TEST(Jets, ArithmeticAgainstTaylorCoefficients) {
  // exp(u + 2v) has d^{i+j} = 2^j e^{u+2v}.
  const auto u = RJet<4>::variable(0.3, 0);
  const auto v = RJet<4>::variable(-0.1, 1);
  const RJet<4> e = exp(u + 2.0 * v);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) EXPECT_NEAR(e.derivative(i, j), std::pow(2.0, j) * std::exp(0.1), 1e-12);
  // (1 / x) * x == 1 and sqrt(x)^2 == x as jets.
  const RJet<4> x = 2.0 + u * v + sin(u);
  const RJet<4> one = reciprocal(x) * x;
  const RJet<4> back = sqrt(x) * sqrt(x) - x;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      EXPECT_NEAR(one.coeff(i, j), i + j == 0 ? 1.0 : 0.0, 1e-13);
      EXPECT_NEAR(back.coeff(i, j), 0.0, 1e-13);
    }
}

TEST(ParamMaps, RegaugeAndSwap) {
  const ParamMap f = mixed_map();
  const Polynomial2 phase{{{1, 0, 0.5}, {1, 1, -1.0}, {0, 2, 0.25}}};
  const ParamMap g = regauge(f, phase);
  const double u = 0.4, v = -0.3;
  const Complex e = std::exp(Complex(0.0, 0.5 * u - u * v + 0.25 * v * v));
  EXPECT_LT((g(u, v) - e * f(u, v)).norm(), 1e-14);
  // The regauged jets agree with finite differences of the regauged values.
  const FdPartials fd = fd_oracle(g, u, v, 2, 1e-4);
  const Jet3 ex = jet3_eval(g, u, v);
  EXPECT_LT((fd.partials.second[1] - ex.second[1]).norm(), 1e-6);

  const ParamMap s = swap_parameters(f);
  EXPECT_LT((s(u, v) - f(v, u)).norm(), 1e-15);
  EXPECT_LT((jet3_eval(s, u, v).first[0] - jet3_eval(f, v, u).first[1]).norm(), 1e-14);
}

TEST(ParamMaps, NonFiniteOutputThrows) {
  const ParamMap f(1, [](const auto& u, const auto&) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{complexify(log(u))};
  });
  EXPECT_THROW(jet3_eval(f, -1.0, 0.0), EvaluationError);
}

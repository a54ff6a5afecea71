#include "cpbih/catalog.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cpbih/projective.hpp"

namespace cpbih {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Plus: return "plus";
    case Branch::Minus: return "minus";
    case Branch::Custom: return "custom";
  }
  return "?";
}

TorusSpec torus_radii(Branch branch) {
  if (branch == Branch::Custom) throw DomainError("torus_radii needs the plus or minus branch");
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  const double s41 = std::sqrt(41.0);
  TorusSpec t;
  t.r1 = std::sqrt((9.0 + sign * s41) / 20.0);
  t.r2 = std::sqrt((11.0 - sign * s41) / 40.0);
  t.r3 = t.r2;
  t.branch = branch;
  return t;
}

Chart torus_chart(const TorusSpec& spec, double rho) {
  if (!(rho > 0.0)) throw DomainError("torus charts need rho > 0");
  if (!(spec.r1 > 0.0 && spec.r2 > 0.0 && spec.r3 > 0.0)) throw DomainError("torus radii must be positive");
  const double a1 = spec.r1 * spec.r1, a2 = spec.r2 * spec.r2, a3 = spec.r3 * spec.r3;
  if (std::abs(a1 + a2 + a3 - 1.0) > 1e-12) throw DomainError("torus radii must satisfy r1^2 + r2^2 + r3^2 = 1");

  // With theta1 = 0 the horizontal metric in (theta2, theta3) is
  // R^2 (diag(a2, a3) - w w^T), w = (a2, a3); M = G^{-1/2} makes it the identity.
  const double big_r = sphere_radius(rho);
  Eigen::Matrix2d g;
  g << a2 - a2 * a2, -a2 * a3, -a2 * a3, a3 - a3 * a3;
  g *= big_r * big_r;
  const Eigen::Matrix2d m = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(g).operatorInverseSqrt();
  const double c1 = big_r * spec.r1, c2 = big_r * spec.r2, c3 = big_r * spec.r3;

  ParamMap map(3, [=](const auto& u, const auto& v) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    const auto t2 = m(0, 0) * u + m(0, 1) * v;
    const auto t3 = m(1, 0) * u + m(1, 1) * v;
    return std::vector<C>{C(c1), c2 * expi(t2), c3 * expi(t3)};
  });
  std::ostringstream name;
  name << "torus(" << to_string(spec.branch) << ')';
  const double tau = 2.0 * std::numbers::pi;
  return Chart{map, rho, Domain{0.0, tau, 0.0, tau}, name.str()};
}

Chart torus_cp2(Branch branch) { return torus_chart(torus_radii(branch), 4.0); }

Chart perturbed_torus(double r1sq, double r2sq, double r3sq) {
  if (!(r1sq > 0.0 && r2sq > 0.0 && r3sq > 0.0)) throw DomainError("squared radii must be positive");
  if (std::abs(r1sq + r2sq + r3sq - 1.0) > 1e-12) throw DomainError("squared radii must sum to 1");
  TorusSpec t{std::sqrt(r1sq), std::sqrt(r2sq), std::sqrt(r3sq), Branch::Custom};
  return torus_chart(t, 4.0);
}

Chart totally_geodesic_cp1(double rho) {
  ParamMap map(3, [](const auto& u, const auto& v) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{C(1.0), complexify(u, v), C(0.0)};
  });
  return Chart{map, rho, Domain{-0.5, 0.5, -0.5, 0.5}, "cp1"};
}

Chart totally_geodesic_rp2(double rho) {
  ParamMap map(3, [](const auto& u, const auto& v) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{C(1.0), complexify(u), complexify(v)};
  });
  return Chart{map, rho, Domain{-0.5, 0.5, -0.5, 0.5}, "rp2"};
}

Chart generic_chart(double rho) {
  ParamMap map(3, [](const auto& u, const auto& v) {
    using C = complex_of_t<std::decay_t<decltype(u)>>;
    return std::vector<C>{C(1.0), complexify(u, v), complexify(u * u)};
  });
  return Chart{map, rho, Domain{0.1, 0.6, 0.1, 0.6}, "generic"};
}

std::pair<CurveSpec, CurveSpec> gamma_specs(double rho) {
  if (!(rho > 0.0)) throw DomainError("gamma_specs needs rho > 0");
  CurveSpec g1;
  g1.rho = rho;
  g1.curvatures = {std::sqrt(7.0 * rho / 6.0), 0.5 * std::sqrt(5.0 * rho / 42.0), 1.5 * std::sqrt(rho / 42.0)};
  g1.class_tag = CurveClass::I3;
  Eigen::MatrixXd t1 = Eigen::MatrixXd::Zero(4, 4);
  const double t12 = 11.0 * std::sqrt(14.0) / 42.0;
  const double t23 = std::sqrt(70.0) / 42.0;
  t1(0, 1) = t12;
  t1(2, 3) = -t12;
  t1(1, 2) = t23;
  t1(0, 3) = -t23;
  g1.target_torsions = Eigen::MatrixXd(t1 - t1.transpose());

  CurveSpec g2;
  g2.rho = rho;
  g2.curvatures = {std::sqrt(rho / 2.0)};
  g2.class_tag = CurveClass::Circle;
  g2.target_torsions = Eigen::MatrixXd::Zero(2, 2);
  return {g1, g2};
}

FrenetFrame initial_frame(const CurveSpec& spec, int n) {
  Eigen::MatrixXd tau = spec.target_torsions ? *spec.target_torsions
                                             : Eigen::MatrixXd::Zero(spec.order(), spec.order());
  return frame_with_torsions(spec.rho, n, tau);
}

// ---------------------------------------------------------------------------
// Case III surface

MovingFrameModel case_iii_model(double rho) {
  MovingFrameModel m;
  m.data = solve_case_ii(rho);
  const std::array<Eigen::Matrix2d, 4> shape{m.data.a3, m.data.a4, m.data.a5, m.data.a6};

  m.j.setZero();
  m.j(0, 2) = 1.0;   // J E1 = E3
  m.j(1, 3) = 1.0;   // J E2 = E4
  m.j(2, 0) = -1.0;  // J E3 = -E1
  m.j(3, 1) = -1.0;  // J E4 = -E2
  m.j(4, 5) = -1.0;  // J E5 = -E6
  m.j(5, 4) = 1.0;   // J E6 = E5

  Eigen::Matrix<double, 6, 1> hc = Eigen::Matrix<double, 6, 1>::Zero();
  hc(2) = -m.data.t();
  hc(4) = -m.data.n();

  std::vector<std::pair<int, int>> unknown;
  for (int i = 2; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) unknown.emplace_back(i, j);
  auto elementary = [](int i, int j) {
    Matrix6d e = Matrix6d::Zero();
    e(i, j) = 1.0;
    e(j, i) = -1.0;
    return e;
  };

  for (int axis = 0; axis < 2; ++axis) {
    Matrix6d om = Matrix6d::Zero();
    for (int a = 0; a < 2; ++a) {
      for (int al = 0; al < 4; ++al) {
        const double x = shape[al](axis, a);  // <sigma(E_axis, E_a), E_{3+al}>
        om(a, 2 + al) = x;
        om(2 + al, a) = -x;
      }
    }
    // Unknown normal block: J omega = omega J and the normal part of hc^T omega vanishes.
    const int rows = 36 + 4;
    Eigen::MatrixXd lhs(rows, static_cast<int>(unknown.size()));
    Eigen::VectorXd rhs(rows);
    const Matrix6d base = m.j * om - om * m.j;
    const Eigen::Matrix<double, 1, 6> hbase = hc.transpose() * om;
    for (int r = 0; r < 36; ++r) rhs(r) = -base(r % 6, r / 6);
    for (int r = 0; r < 4; ++r) rhs(36 + r) = -hbase(2 + r);
    for (std::size_t k = 0; k < unknown.size(); ++k) {
      const Matrix6d e = elementary(unknown[k].first, unknown[k].second);
      const Matrix6d col = m.j * e - e * m.j;
      for (int r = 0; r < 36; ++r) lhs(r, k) = col(r % 6, r / 6);
      const Eigen::Matrix<double, 1, 6> hrow = hc.transpose() * e;
      for (int r = 0; r < 4; ++r) lhs(36 + r, k) = hrow(2 + r);
    }
    const Eigen::VectorXd sol = lhs.completeOrthogonalDecomposition().solve(rhs);
    for (std::size_t k = 0; k < unknown.size(); ++k) om += sol(k) * elementary(unknown[k].first, unknown[k].second);

    m.omega[axis] = om;
    m.j_residual = std::max(m.j_residual, (m.j * om - om * m.j).cwiseAbs().maxCoeff());
    const Eigen::Matrix<double, 1, 6> dh = hc.transpose() * om;
    m.pmc_residual = std::max(m.pmc_residual, dh.tail<4>().cwiseAbs().maxCoeff());
    m.skew_residual = std::max(m.skew_residual, (om + om.transpose()).cwiseAbs().maxCoeff());
  }
  return m;
}

FrameODEState case_iii_initial_state(double rho) {
  if (!(rho > 0.0)) throw DomainError("rho must be positive");
  const Complex i(0.0, 1.0);
  auto e = [](int k) {
    ComplexVector v = ComplexVector::Zero(4);
    v[k] = 1.0;
    return v;
  };
  FrameODEState s;
  s.z = sphere_radius(rho) * e(0);
  s.e = {e(1), e(2), i * e(1), i * e(2), i * e(3), e(3)};
  return s;
}

FrameODEState frame_rhs(const MovingFrameModel& model, int axis, const FrameODEState& st) {
  const double q = model.data.rho / 4.0;
  const ComplexVector& x = st.e[axis];
  const ComplexVector jx = jmul(x);
  const ComplexVector jz = jmul(st.z);
  FrameODEState d;
  d.z = x;
  for (int i = 0; i < 6; ++i) {
    ComplexVector r = ComplexVector::Zero(st.z.size());
    for (int j = 0; j < 6; ++j) {
      const double w = model.omega[axis](i, j);
      if (w != 0.0) r += w * st.e[j];
    }
    r -= q * re_inner(x, st.e[i]) * st.z;
    r -= q * re_inner(st.e[i], jx) * jz;
    d.e[i] = r;
  }
  return d;
}

namespace {

FrameODEState axpy(const FrameODEState& a, double h, const FrameODEState& d) {
  FrameODEState r;
  r.z = a.z + h * d.z;
  for (int i = 0; i < 6; ++i) r.e[i] = a.e[i] + h * d.e[i];
  return r;
}

double state_gap(const FrameODEState& a, const FrameODEState& b) {
  double g = (a.z - b.z).norm();
  for (int i = 0; i < 6; ++i) g = std::max(g, (a.e[i] - b.e[i]).norm());
  return g;
}

double state_defect(const FrameODEState& s, double rho) {
  double d = std::abs(s.z.norm() - sphere_radius(rho));
  for (int i = 0; i < 6; ++i) {
    d = std::max(d, horizontality_defect(s.z, s.e[i]));
    for (int j = 0; j < 6; ++j) d = std::max(d, std::abs(re_inner(s.e[i], s.e[j]) - (i == j ? 1.0 : 0.0)));
  }
  return d;
}

}  // namespace

FrameODEState flow(const MovingFrameModel& model, int axis, const FrameODEState& state, double length,
                   double step) {
  if (!(step > 0.0)) throw DomainError("integration step must be positive");
  if (length == 0.0) return state;
  const auto steps = static_cast<long>(std::ceil(std::abs(length) / step - 1e-9));
  const double h = length / static_cast<double>(steps);
  FrameODEState y = state;
  for (long k = 0; k < steps; ++k) {
    const FrameODEState k1 = frame_rhs(model, axis, y);
    const FrameODEState k2 = frame_rhs(model, axis, axpy(y, 0.5 * h, k1));
    const FrameODEState k3 = frame_rhs(model, axis, axpy(y, 0.5 * h, k2));
    const FrameODEState k4 = frame_rhs(model, axis, axpy(y, h, k3));
    y.z += (h / 6.0) * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
    for (int i = 0; i < 6; ++i) y.e[i] += (h / 6.0) * (k1.e[i] + 2.0 * k2.e[i] + 2.0 * k3.e[i] + k4.e[i]);
  }
  return y;
}

CaseIIISurface case_iii_surface(double rho, double step, double extent, int nodes) {
  if (!(step > 0.0)) throw DomainError("integration step must be positive");
  if (nodes < 1) throw DomainError("need at least one grid cell");
  const MovingFrameModel model = case_iii_model(rho);
  const FrameODEState s0 = case_iii_initial_state(rho);

  // Constant generators: the structure equations are linear with constant
  // coefficients in the frame, so they are generated by complex-linear maps
  // of C^4 determined on the complex basis (z0, E1, E2, E6).
  Eigen::MatrixXcd basis(4, 4);
  basis << s0.z, s0.e[0], s0.e[1], s0.e[5];
  const Eigen::MatrixXcd basis_inv = basis.inverse();
  std::array<Eigen::MatrixXcd, 2> generator;
  double consistency = 0.0;
  for (int axis = 0; axis < 2; ++axis) {
    const FrameODEState d = frame_rhs(model, axis, s0);
    Eigen::MatrixXcd image(4, 4);
    image << d.z, d.e[0], d.e[1], d.e[5];
    generator[axis] = image * basis_inv;
    consistency = std::max(consistency, (generator[axis] * s0.z - d.z).norm());
    for (int i = 0; i < 6; ++i) consistency = std::max(consistency, (generator[axis] * s0.e[i] - d.e[i]).norm());
  }
  const Eigen::MatrixXcd ga = generator[0];
  const Eigen::MatrixXcd gb = generator[1];

  if (!(extent > 0.0)) {
    double omega = 0.0;
    for (const auto& g : generator) omega = std::max(omega, g.eigenvalues().cwiseAbs().maxCoeff());
    extent = omega > 0.0 ? std::min(5.0, 2.0 * std::numbers::pi / omega) : 5.0;
  }

  const ComplexVector z0 = s0.z;
  ParamMap map(4, [ga, gb, z0](const auto& u, const auto& v) {
    using J = std::decay_t<decltype(u)>;
    constexpr int N = J::kOrder;
    const Eigen::MatrixXcd e = (u.value() * ga + v.value() * gb).exp();
    // exp((u0 + du) A + (v0 + dv) B) z0 = sum_m (du A + dv B)^m / m! exp(u0 A + v0 B) z0
    const J du_ = u.increment(), dv_ = v.increment();
    JetVec<N> term = JetVec<N>::constant(e * z0);
    JetVec<N> acc = term;
    for (int k = 1; k <= N; ++k) {
      term = (1.0 / k) * (du_ * cpbih::apply(ga, term) + dv_ * cpbih::apply(gb, term));
      acc += term;
    }
    std::vector<CJet<N>> entries;
    for (int k = 0; k < acc.size(); ++k) entries.push_back(acc[k]);
    return entries;
  });

  CaseIIISurface out{Chart{map, rho, Domain{0.0, extent, 0.0, extent}, "case-iii"}};
  out.model = model;
  out.generator = generator;
  out.generator_consistency = consistency;
  out.generator_commutator = (ga * gb - gb * ga).norm();
  out.extent = extent;
  out.step = step;
  out.nodes = nodes;

  // RK4 samples: along E1 to each u node, then along E2.
  const double du = extent / nodes;
  std::vector<FrameODEState> spine{s0};
  for (int i = 1; i <= nodes; ++i) spine.push_back(flow(model, 0, spine.back(), du, step));
  out.samples.reserve(static_cast<std::size_t>((nodes + 1) * (nodes + 1)));
  for (int i = 0; i <= nodes; ++i) {
    FrameODEState s = spine[i];
    out.samples.push_back(s);
    for (int j = 1; j <= nodes; ++j) {
      s = flow(model, 1, s, du, step);
      out.samples.push_back(s);
    }
  }
  const FrameODEState& u_then_v = out.samples.back();
  FrameODEState v_then_u = flow(model, 1, s0, extent, step);
  v_then_u = flow(model, 0, v_then_u, extent, step);
  out.commutativity = state_gap(u_then_v, v_then_u);

  for (const auto& s : out.samples) out.frame_defect = std::max(out.frame_defect, state_defect(s, rho));
  for (int i = 0; i <= nodes; ++i) {
    for (int j = 0; j <= nodes; ++j) {
      const ComplexVector zc = out.chart.map(i * du, j * du);
      out.rk4_vs_exact = std::max(out.rk4_vs_exact, (zc - out.samples[i * (nodes + 1) + j].z).norm());
    }
  }

  if (!(out.commutativity <= 1e-4)) {
    std::ostringstream os;
    os << "coordinate flows do not commute: residual " << out.commutativity;
    throw IntegrabilityError(os.str());
  }
  return out;
}

}  // namespace cpbih

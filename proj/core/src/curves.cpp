#include "cpbih/curves.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "cpbih/error.hpp"
#include "cpbih/projective.hpp"

namespace cpbih {

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::I1: return "I1";
    case CurveClass::I2: return "I2";
    case CurveClass::I3: return "I3";
    case CurveClass::I4: return "I4";
    case CurveClass::I3Prime: return "I3'";
    case CurveClass::I4Prime: return "I4'";
    case CurveClass::Circle: return "circle";
    case CurveClass::Geodesic: return "geodesic";
  }
  return "?";
}

Eigen::MatrixXd complex_torsions(const FrenetFrame& frame) {
  const int r = static_cast<int>(frame.x.size());
  Eigen::MatrixXd tau = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) tau(i, j) = re_inner(frame.x[i], jmul(frame.x[j]));
  return tau;
}

Eigen::Matrix4d helix_class_torsions(double k1, double k2, double k3, CurveClass c) {
  if (!(k1 > 0.0 && k2 > 0.0 && k3 > 0.0)) throw DomainError("helix curvatures must be positive");
  const bool equal = std::abs(k1 - k3) <= 1e-14 * std::max(k1, k3);
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  auto set = [&t](int i, int j, double x) {
    t(i, j) = x;
    t(j, i) = -x;
  };
  const double mu = (k1 + k3) / std::hypot(k2, k1 + k3);
  switch (c) {
    case CurveClass::I1:
    case CurveClass::I2: {
      const double s = c == CurveClass::I1 ? 1.0 : -1.0;
      set(0, 1, s * mu);
      set(2, 3, s * mu);
      set(1, 2, s * k2 * mu / (k1 + k3));
      set(0, 3, s * k2 * mu / (k1 + k3));
      return t;
    }
    case CurveClass::I3:
    case CurveClass::I4: {
      if (equal) throw ClassError("classes I3/I4 require kappa1 != kappa3; use I3'/I4'");
      const double s = c == CurveClass::I3 ? 1.0 : -1.0;
      const double nu = (k1 - k3) / std::hypot(k2, k1 - k3);
      set(0, 1, s * nu);
      set(2, 3, -s * nu);
      set(1, 2, s * k2 * nu / (k1 - k3));
      set(0, 3, -s * k2 * nu / (k1 - k3));
      return t;
    }
    case CurveClass::I3Prime:
    case CurveClass::I4Prime: {
      if (!equal) throw ClassError("classes I3'/I4' require kappa1 == kappa3");
      const double s = c == CurveClass::I3Prime ? 1.0 : -1.0;
      set(1, 2, s);
      set(0, 3, -s);
      return t;
    }
    default:
      throw ClassError("not a helix class of order 4: " + to_string(c));
  }
}

FrenetFrame frame_with_torsions(double rho, int n, const Eigen::MatrixXd& torsions) {
  if (!(rho > 0.0)) throw DomainError("rho must be positive");
  const int r = static_cast<int>(torsions.rows());
  if (torsions.cols() != r) throw DimensionError("torsion matrix must be square");
  if (r > 2 * n) throw DomainError("osculating order exceeds 2n");
  if ((torsions + torsions.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InconsistencyError("torsion matrix is not antisymmetric");

  FrenetFrame f;
  f.z = ComplexVector::Zero(n + 1);
  f.z[0] = sphere_radius(rho);

  std::vector<ComplexVector> seeds;
  for (int k = 1; k <= n; ++k) {
    ComplexVector e = ComplexVector::Zero(n + 1);
    e[k] = 1.0;
    seeds.push_back(e);
    seeds.push_back(jmul(e));
  }

  for (int k = 0; k < r; ++k) {
    // Orthonormal basis of W = span{X_j, J X_j : j < k}.
    std::vector<ComplexVector> basis;
    auto absorb = [&basis](ComplexVector w) {
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) w -= re_inner(w, b) * b;
      const double nw = w.norm();
      if (nw > 1e-9) basis.push_back(w / nw);
    };
    for (int j = 0; j < k; ++j) {
      absorb(f.x[j]);
      absorb(jmul(f.x[j]));
    }
    // w in W with <w, X_j> = 0 and <w, J X_j> = tau(k, j).
    ComplexVector w = ComplexVector::Zero(n + 1);
    if (!basis.empty()) {
      Eigen::MatrixXd a(2 * k, basis.size());
      Eigen::VectorXd rhs(2 * k);
      for (int j = 0; j < k; ++j) {
        for (std::size_t m = 0; m < basis.size(); ++m) {
          a(2 * j, m) = re_inner(basis[m], f.x[j]);
          a(2 * j + 1, m) = re_inner(basis[m], jmul(f.x[j]));
        }
        rhs(2 * j) = 0.0;
        rhs(2 * j + 1) = torsions(k, j);
      }
      const Eigen::VectorXd c = a.completeOrthogonalDecomposition().solve(rhs);
      if ((a * c - rhs).norm() > 1e-10)
        throw InconsistencyError("complex torsions are not realisable by an orthonormal frame");
      for (std::size_t m = 0; m < basis.size(); ++m) w += c(m) * basis[m];
    }
    const double rest2 = 1.0 - w.squaredNorm();
    if (rest2 < -1e-12) throw InconsistencyError("complex torsions force a non-unit frame vector");
    if (rest2 <= 1e-12) {
      // Fully determined by the constraints; absorb round-off in the length.
      if (w.norm() == 0.0) throw InconsistencyError("complex torsions leave a zero frame vector");
      w.normalize();
    } else {
      ComplexVector p;
      for (const auto& s : seeds) {
        ComplexVector q = s;
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& b : basis) q -= re_inner(q, b) * b;
        if (q.norm() > 1e-9) {
          p = q / q.norm();
          break;
        }
      }
      if (p.size() == 0) throw InconsistencyError("horizontal space exhausted while building the frame");
      w += std::sqrt(rest2) * p;
    }
    f.x.push_back(w);
  }

  const Eigen::MatrixXd got = complex_torsions(f);
  if ((got - torsions).cwiseAbs().maxCoeff() > 1e-10)
    throw InconsistencyError("constructed frame misses the target torsions");
  return f;
}

CircleData circle_spec(double kappa, double tau, double rho, int n) {
  if (!(kappa > 0.0)) throw DomainError("circle curvature must be positive");
  if (!(std::abs(tau) < 1.0)) throw DomainError("circle complex torsion must satisfy |tau| < 1");
  CircleData c;
  c.spec.rho = rho;
  c.spec.curvatures = {kappa};
  c.spec.class_tag = CurveClass::Circle;
  Eigen::MatrixXd t(2, 2);
  t << 0.0, tau, -tau, 0.0;
  c.spec.target_torsions = t;
  c.initial = frame_with_torsions(rho, n, t);
  return c;
}

FrameDefects frame_defects(const FrenetFrame& frame, double rho) {
  FrameDefects d;
  const int r = static_cast<int>(frame.x.size());
  for (int i = 0; i < r; ++i) {
    d.horizontality = std::max(d.horizontality, horizontality_defect(frame.z, frame.x[i]));
    for (int j = 0; j < r; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      d.orthonormality = std::max(d.orthonormality, std::abs(re_inner(frame.x[i], frame.x[j]) - target));
    }
  }
  d.radius = std::abs(frame.z.norm() - sphere_radius(rho));
  return d;
}

FrameDefects max_defects(const CurveSample& sample) {
  FrameDefects m;
  for (const auto& f : sample.frames) {
    const FrameDefects d = frame_defects(f, sample.rho);
    m.orthonormality = std::max(m.orthonormality, d.orthonormality);
    m.horizontality = std::max(m.horizontality, d.horizontality);
    m.radius = std::max(m.radius, d.radius);
  }
  return m;
}

namespace {

// Frenet right-hand side nabla X_i = -kappa_{i-1} X_{i-1} + kappa_i X_{i+1}.
ComplexVector frenet_rhs(const std::vector<double>& kappa, const std::vector<ComplexVector>& x, int i) {
  ComplexVector r = ComplexVector::Zero(x[0].size());
  const int last = static_cast<int>(x.size()) - 1;
  if (i > 0) r -= kappa[i - 1] * x[i - 1];
  if (i < last) r += kappa[i] * x[i + 1];
  return r;
}

FrenetFrame lifted_rhs(const CurveSpec& spec, const FrenetFrame& f) {
  const double q = spec.rho / 4.0;
  FrenetFrame d;
  d.z = f.x[0];
  const ComplexVector jz = jmul(f.z);
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    ComplexVector r = frenet_rhs(spec.curvatures, f.x, static_cast<int>(i));
    r -= q * re_inner(f.x[0], f.x[i]) * f.z;
    r -= q * re_inner(f.x[i], jmul(f.x[0])) * jz;
    d.x.push_back(r);
  }
  return d;
}

FrenetFrame axpy(const FrenetFrame& a, double h, const FrenetFrame& d) {
  FrenetFrame r;
  r.z = a.z + h * d.z;
  for (std::size_t i = 0; i < a.x.size(); ++i) r.x.push_back(a.x[i] + h * d.x[i]);
  return r;
}

void restabilise(FrenetFrame& f, double rho) {
  f.z *= sphere_radius(rho) / f.z.norm();
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    ComplexVector w = horizontal_part(f.z, f.x[i]);
    for (std::size_t j = 0; j < i; ++j) w -= re_inner(w, f.x[j]) * f.x[j];
    f.x[i] = w / w.norm();
  }
}

void validate_spec(const CurveSpec& spec, const FrenetFrame& initial) {
  if (!(spec.rho > 0.0)) throw DomainError("Frenet integration requires rho > 0");
  for (double k : spec.curvatures)
    if (!(k > 0.0)) throw DomainError("Frenet curvatures must be positive");
  if (static_cast<int>(initial.x.size()) != spec.order())
    throw DimensionError("initial frame size does not match the osculating order");
  const int n = static_cast<int>(initial.z.size()) - 1;
  if (spec.order() > 2 * n) throw DomainError("osculating order exceeds 2n");
  const FrameDefects d = frame_defects(initial, spec.rho);
  if (d.orthonormality > 1e-10 || d.horizontality > 1e-10 || d.radius > 1e-10)
    throw DomainError("initial frame must be orthonormal, horizontal and on the sphere");

  const Eigen::MatrixXd tau = complex_torsions(initial);
  if (spec.target_torsions) {
    if (spec.target_torsions->rows() != tau.rows() || (*spec.target_torsions - tau).cwiseAbs().maxCoeff() > 1e-10)
      throw InconsistencyError("initial frame does not realise the target torsions");
  }
  if (spec.class_tag && spec.curvatures.size() == 3) {
    const auto c = *spec.class_tag;
    if (c != CurveClass::Circle && c != CurveClass::Geodesic) {
      const Eigen::Matrix4d table =
          helix_class_torsions(spec.curvatures[0], spec.curvatures[1], spec.curvatures[2], c);
      if ((table - tau).cwiseAbs().maxCoeff() > 1e-10)
        throw InconsistencyError("initial frame torsions disagree with the class table for " + to_string(c));
    }
  }
}

}  // namespace

CurveSample integrate_frenet(const CurveSpec& spec, const FrenetFrame& initial, double length, double step,
                             const IntegrationOptions& options) {
  if (!(step > 0.0)) throw DomainError("integration step must be positive");
  if (!(length >= 0.0)) throw DomainError("integration range must be non-negative");
  validate_spec(spec, initial);

  CurveSample out;
  out.rho = spec.rho;
  const auto steps = static_cast<long>(std::ceil(length / step - 1e-9));
  out.s.reserve(steps + 1);
  out.frames.reserve(steps + 1);
  out.s.push_back(0.0);
  out.frames.push_back(initial);

  FrenetFrame y = initial;
  double s = 0.0;
  for (long k = 0; k < steps; ++k) {
    const double h = std::min(step, length - s);
    const FrenetFrame k1 = lifted_rhs(spec, y);
    const FrenetFrame k2 = lifted_rhs(spec, axpy(y, 0.5 * h, k1));
    const FrenetFrame k3 = lifted_rhs(spec, axpy(y, 0.5 * h, k2));
    const FrenetFrame k4 = lifted_rhs(spec, axpy(y, h, k3));
    y.z += (h / 6.0) * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
    for (std::size_t i = 0; i < y.x.size(); ++i)
      y.x[i] += (h / 6.0) * (k1.x[i] + 2.0 * k2.x[i] + 2.0 * k3.x[i] + k4.x[i]);
    s = (k + 1 == steps) ? length : s + h;
    if (options.gram_schmidt) restabilise(y, spec.rho);

    const FrameDefects d = frame_defects(y, spec.rho);
    if (!(d.orthonormality <= options.breakdown) || !(d.horizontality <= options.breakdown)) {
      std::ostringstream os;
      os << "Frenet frame degenerated at s = " << s << " (orthonormality defect " << d.orthonormality << ")";
      throw IntegrationError(os.str());
    }
    out.s.push_back(s);
    out.frames.push_back(y);
  }
  return out;
}

RecoveredFrenet recover_frenet(const CurveSample& sample, std::size_t index, const CurveSpec& spec) {
  if (index < 2 || index + 2 >= sample.frames.size())
    throw DomainError("difference stencil does not fit at this sample");
  const double h = sample.s[index + 1] - sample.s[index];
  for (std::size_t k = index - 2; k < index + 2; ++k) {
    if (std::abs((sample.s[k + 1] - sample.s[k]) - h) > 1e-12 * std::max(1.0, sample.s.back()))
      throw DomainError("recovery needs a uniform arclength grid around the sample");
  }
  auto d4 = [&](auto get) -> ComplexVector {
    return (get(index - 2) - 8.0 * get(index - 1) + 8.0 * get(index + 1) - get(index + 2)) / (12.0 * h);
  };
  const FrenetFrame& f = sample.frames[index];
  const ComplexVector dz = d4([&](std::size_t k) { return sample.frames[k].z; });
  const int r = static_cast<int>(f.x.size());
  std::vector<ComplexVector> nabla;
  for (int i = 0; i < r; ++i) {
    const ComplexVector dx = d4([&](std::size_t k) { return sample.frames[k].x[i]; });
    nabla.push_back(covariant_derivative(f.z, dz, f.x[i], dx));
  }
  RecoveredFrenet out;
  for (int i = 0; i + 1 < r; ++i) out.curvatures.push_back(re_inner(nabla[i], f.x[i + 1]));
  out.torsions = complex_torsions(f);
  for (int i = 0; i < r; ++i) {
    out.frenet_residual =
        std::max(out.frenet_residual, (nabla[i] - frenet_rhs(spec.curvatures, f.x, i)).norm());
  }
  return out;
}

namespace {

template <int N>
struct CurveJets {
  JetVec<N> lift;
  RJet<N> norm2;
  RJet<N> lambda;
  RJet<N> inv_speed;
  int axis;

  JetVec<N> project(const JetVec<N>& w) const {
    return w - (herm(w, lift) / complexify(norm2)) * lift;
  }
  // Covariant derivative with respect to arclength.
  JetVec<N> d(const JetVec<N>& y) const { return inv_speed * (project(y.partial(axis)) - lambda * jmul(y)); }
};

}  // namespace

CurveAnalysis analyze_coordinate_curve(const ParamMap& map, double rho, int axis, double u, double v,
                                       double flat_tol) {
  constexpr int N = kMaxJetOrder;
  if (!(rho > 0.0)) throw DomainError("rho must be positive");
  if (axis != 0 && axis != 1) throw DomainError("axis must be 0 or 1");
  const RJet<N> uj = axis == 0 ? RJet<N>::variable(u, 0) : RJet<N>(u);
  const RJet<N> vj = axis == 1 ? RJet<N>::variable(v, 1) : RJet<N>(v);

  CurveJets<N> c;
  c.axis = axis;
  c.lift = map.jet<N>(uj, vj);
  if (!all_finite(c.lift)) throw EvaluationError("coordinate curve is not smooth at the point");
  c.norm2 = re_inner(c.lift, c.lift);
  if (!(c.norm2.value() > 0.0)) throw DegenerateError("chart lift vanishes");
  const RJet<N> scale = (2.0 / std::sqrt(rho)) * pow(c.norm2, -0.5);
  const JetVec<N> d = c.lift.partial(axis);
  c.lambda = imag(herm(d, c.lift)) / c.norm2;
  const JetVec<N> velocity = scale * c.project(d);
  const RJet<N> speed = sqrt(re_inner(velocity, velocity));
  if (!(speed.value() > 0.0)) throw ImmersionError("coordinate curve is singular at the point");
  c.inv_speed = reciprocal(speed);

  CurveAnalysis out;
  out.speed = speed.value();
  std::vector<JetVec<N>> x{c.inv_speed * velocity};
  JetVec<N> w = c.d(x[0]);
  // Each step loses one order; with N = 5 four frame vectors and the
  // closure term remain exact.
  while (x.size() < 4) {
    const RJet<N> kappa = sqrt(re_inner(w, w));
    if (!(kappa.value() > flat_tol)) break;
    out.curvatures.push_back(kappa.value());
    x.push_back(reciprocal(kappa) * w);
    const std::size_t k = x.size() - 1;
    w = c.d(x[k]) + kappa * x[k - 1];
  }
  out.closure = w.value().norm();

  out.frame.z = (scale * c.lift).value();
  for (const auto& xi : x) out.frame.x.push_back(xi.value());
  out.torsions = complex_torsions(out.frame);
  return out;
}

std::string curve_csv(const CurveSample& sample, const CurveSpec& spec, std::size_t stride) {
  if (stride == 0) throw DomainError("stride must be positive");
  std::ostringstream os;
  os << std::setprecision(17);
  if (sample.frames.empty()) return "s\n";
  const int dim = static_cast<int>(sample.frames[0].z.size());
  const int r = static_cast<int>(sample.frames[0].x.size());
  os << "s";
  for (int k = 0; k < dim; ++k) os << ",z" << k << "_re,z" << k << "_im";
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < dim; ++k) os << ",X" << i + 1 << '_' << k << "_re,X" << i + 1 << '_' << k << "_im";
  for (int i = 1; i < r; ++i) os << ",kappa" << i;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) os << ",tau" << i + 1 << j + 1;
  os << '\n';

  for (std::size_t idx = 0; idx < sample.frames.size(); idx += stride) {
    const FrenetFrame& f = sample.frames[idx];
    os << sample.s[idx];
    for (int k = 0; k < dim; ++k) os << ',' << f.z[k].real() << ',' << f.z[k].imag();
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < dim; ++k) os << ',' << f.x[i][k].real() << ',' << f.x[i][k].imag();
    const bool fits = idx >= 2 && idx + 2 < sample.frames.size();
    std::vector<double> kappa;
    if (fits) kappa = recover_frenet(sample, idx, spec).curvatures;
    for (int i = 0; i + 1 < r; ++i) {
      os << ',';
      if (fits) os << kappa[i];
    }
    const Eigen::MatrixXd tau = complex_torsions(f);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) os << ',' << tau(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace cpbih

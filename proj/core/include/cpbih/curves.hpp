#pragma once

/**
 * @file curves.hpp
 * @brief Frenet curves in CP^n(rho): lifted integration, complex torsions,
 *        holomorphic helix classes and holomorphic circles.
 *
 * Curves are integrated as horizontal lifts z(s) on S^{2n+1}(rho/4). For a
 * horizontal field Y along a horizontal lift with velocity X,
 *
 *     dY/ds = nabla_X Y - (rho/4) <X, Y> z - (rho/4) <Y, J X> J z,
 *
 * the two extra terms being the sphere's radial second fundamental form and
 * the vertical (Hopf) component. Feeding the Frenet right-hand sides into
 * nabla_X Y gives the lifted ODE.
 */

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cpbih/ambient.hpp"
#include "cpbih/calculus.hpp"

namespace cpbih {

enum class CurveClass { I1, I2, I3, I4, I3Prime, I4Prime, Circle, Geodesic };

std::string to_string(CurveClass c);

struct CurveSpec {
  double rho = 4.0;
  std::vector<double> curvatures;  ///< kappa_1 .. kappa_{r-1}
  std::optional<CurveClass> class_tag;
  std::optional<Eigen::MatrixXd> target_torsions;  ///< r x r, entry (i,j) = <X_i, J X_j>

  /// Osculating order r.
  int order() const { return static_cast<int>(curvatures.size()) + 1; }
};

/// Lift and Frenet frame X_1 .. X_r at one point.
struct FrenetFrame {
  ComplexVector z;
  std::vector<ComplexVector> x;
};

struct CurveSample {
  double rho = 0.0;
  std::vector<double> s;
  std::vector<FrenetFrame> frames;
};

struct IntegrationOptions {
  /// Re-orthonormalise the frame after every step. Off by default so drift
  /// stays observable.
  bool gram_schmidt = false;
  /// Abort once the orthonormality defect exceeds this.
  double breakdown = 1e-4;
};

/// RK4 integration of the lifted Frenet system over [0, length].
CurveSample integrate_frenet(const CurveSpec& spec, const FrenetFrame& initial, double length,
                             double step = 1e-3, const IntegrationOptions& options = {});

/// tau_{ij} = <X_i, J X_j> for all i, j (antisymmetric; the upper triangle
/// holds the complex torsions).
Eigen::MatrixXd complex_torsions(const FrenetFrame& frame);

/// Torsion table of a holomorphic helix class of order 4 in CP^2.
Eigen::Matrix4d helix_class_torsions(double k1, double k2, double k3, CurveClass c);

/// Orthonormal horizontal frame at z0 = (2/sqrt(rho)) e_0 in C^{n+1} whose complex
/// torsions equal `torsions`. Built by Gram-Schmidt against the horizontal
/// coordinate directions e_1, i e_1, e_2, ... (first admissible seed wins).
/// Throws InconsistencyError when no such frame exists.
FrenetFrame frame_with_torsions(double rho, int n, const Eigen::MatrixXd& torsions);

struct CircleData {
  CurveSpec spec;
  FrenetFrame initial;
};

/// Holomorphic circle with curvature kappa and complex torsion tau, |tau| < 1.
CircleData circle_spec(double kappa, double tau, double rho, int n = 2);

struct FrameDefects {
  double orthonormality = 0.0;  ///< max |<X_i,X_j> - delta_ij|
  double horizontality = 0.0;   ///< max horizontality defect of the X_i
  double radius = 0.0;          ///< | |z| - 2/sqrt(rho) |
};

FrameDefects frame_defects(const FrenetFrame& frame, double rho);
FrameDefects max_defects(const CurveSample& sample);

/// Frenet data recomputed from integrated samples through fourth-order
/// central differences and the projective connection.
struct RecoveredFrenet {
  std::vector<double> curvatures;  ///< <nabla X_i, X_{i+1}>
  Eigen::MatrixXd torsions;
  double frenet_residual = 0.0;    ///< max |nabla X_i - Frenet rhs(spec)|
};

RecoveredFrenet recover_frenet(const CurveSample& sample, std::size_t index, const CurveSpec& spec);

/// Frenet analysis of a coordinate curve t -> map(t, v0) (axis 0) or
/// map(u0, t) (axis 1) from exact jets; stops when a curvature drops below
/// `flat_tol` or after four frame vectors.
struct CurveAnalysis {
  std::vector<double> curvatures;
  FrenetFrame frame;
  Eigen::MatrixXd torsions;
  double closure = 0.0;  ///< |nabla X_r + kappa_{r-1} X_{r-1}|: vanishes for an order-r helix
  double speed = 0.0;
};

CurveAnalysis analyze_coordinate_curve(const ParamMap& map, double rho, int axis, double u, double v,
                                       double flat_tol = 1e-8);

/// CSV export: s, lift coordinates, frame vectors, recovered curvatures and
/// torsions (blank where the difference stencil does not fit).
std::string curve_csv(const CurveSample& sample, const CurveSpec& spec, std::size_t stride = 1);

}  // namespace cpbih

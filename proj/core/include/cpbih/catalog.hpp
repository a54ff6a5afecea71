#pragma once

/**
 * @file catalog.hpp
 * @brief Explicit surfaces and curves: the Lagrangian pmc biharmonic tori of
 *        CP^2(4), the Case III product surface in CP^3(rho), its two
 *        generating curves, and control charts.
 */

#include <Eigen/Dense>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cpbih/biharmonic.hpp"
#include "cpbih/curves.hpp"
#include "cpbih/surfaces.hpp"

namespace cpbih {

enum class Branch { Plus, Minus, Custom };

std::string to_string(Branch b);

struct TorusSpec {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  Branch branch = Branch::Custom;
};

/// Radii of the biharmonic tori: r1^2 = (9 +- sqrt 41)/20, r2^2 = r3^2 = (11 -+ sqrt 41)/40.
TorusSpec torus_radii(Branch branch);

/**
 * Chart of pi(S^1(r1) x S^1(r2) x S^1(r3)) in CP^2(rho), lift
 * (R r1, R r2 e^{i theta2}, R r3 e^{i theta3}) with R = 2/sqrt(rho). The first
 * phase is fixed by the Hopf action; (theta2, theta3) = M (u, v) with M chosen
 * so that (u, v) are orthonormal coordinates of the flat induced metric.
 */
Chart torus_chart(const TorusSpec& spec, double rho = 4.0);

/// torus_chart(torus_radii(branch)) at rho = 4. Throws DomainError for Branch::Custom.
Chart torus_cp2(Branch branch);

/// Torus with squared radii (r1sq, r2sq, r3sq); they must be positive and sum to 1.
Chart perturbed_torus(double r1sq, double r2sq, double r3sq);

/// (1, u + iv, 0): a totally geodesic CP^1.
Chart totally_geodesic_cp1(double rho);

/// (1, u, v): a totally geodesic totally real RP^2.
Chart totally_geodesic_rp2(double rho);

/// (1, u + iv, u^2): a generic chart, neither pmc nor biharmonic.
Chart generic_chart(double rho);

/// The generating curves of the Case III surface: an I3 helix of order 4
/// and a holomorphic circle with zero torsion.
std::pair<CurveSpec, CurveSpec> gamma_specs(double rho);

/// Initial frame in C^{n+1} realising spec.target_torsions.
FrenetFrame initial_frame(const CurveSpec& spec, int n = 2);

/// Lift and adapted frame E1 .. E6 of the Case III surface.
struct FrameODEState {
  ComplexVector z;
  std::array<ComplexVector, 6> e;
};

using Matrix6d = Eigen::Matrix<double, 6, 6>;

/**
 * Structure equations of the Case III surface in the frame
 * E1 = T/|T|, E2, E3 = JE1, E4 = JE2, E5 = JN/|N|, E6 = N/|N|:
 * nabla-bar_{E_a} E_i = sum_j omega[a](i, j) E_j. The tangent-normal blocks
 * are the shape operators; the normal block is the least-squares solution of
 * J-parallelism together with nabla-perp H = 0.
 */
struct MovingFrameModel {
  CaseIIData data;
  Matrix6d j;                     ///< J E_i = sum_j j(i, j) E_j
  std::array<Matrix6d, 2> omega;
  double j_residual = 0.0;        ///< max |J omega - omega J|
  double pmc_residual = 0.0;      ///< normal part of nabla-bar H
  double skew_residual = 0.0;     ///< max |omega + omega^T|
};

MovingFrameModel case_iii_model(double rho);

/// z0 = (2/sqrt rho) e_0, E1 = e_1, E2 = e_2, E3 = i e_1, E4 = i e_2, E5 = i e_3, E6 = e_3.
FrameODEState case_iii_initial_state(double rho);

/// d/ds of the state along E_axis (lifted structure equations).
FrameODEState frame_rhs(const MovingFrameModel& model, int axis, const FrameODEState& state);

/// RK4 flow along E_axis over `length` with step `step`.
FrameODEState flow(const MovingFrameModel& model, int axis, const FrameODEState& state, double length,
                   double step);

struct CaseIIISurface {
  Chart chart;
  MovingFrameModel model{};
  std::array<Eigen::MatrixXcd, 2> generator{};  ///< z(u, v) = exp(u A + v B) z0
  double generator_consistency = 0.0;  ///< max |A E_i - rhs_i| over the frame
  double generator_commutator = 0.0;   ///< |[A, B]|
  double commutativity = 0.0;          ///< RK4: u-then-v against v-then-u at (extent, extent)
  double rk4_vs_exact = 0.0;           ///< RK4 node samples against the exponential chart
  double frame_defect = 0.0;           ///< orthonormality and horizontality along the RK4 samples
  double extent = 0.0;
  double step = 0.0;
  int nodes = 0;
  std::vector<FrameODEState> samples{};  ///< RK4 states at (i, j) * extent/nodes, row-major in i
};

/**
 * Integrates the structure equations from the initial state along E1 and
 * then E2, checks that the two coordinate flows commute, and returns the
 * chart z(u, v) = exp(uA + vB) z0 whose generators reproduce the integrated
 * frame. `extent` <= 0 selects min(5, 2 pi / largest generator frequency).
 * Throws IntegrabilityError when the commutativity residual exceeds 1e-4.
 */
CaseIIISurface case_iii_surface(double rho, double step = 1e-3, double extent = 0.0, int nodes = 8);

}  // namespace cpbih

#pragma once

/**
 * @file biharmonic.hpp
 * @brief Bitension residuals of surfaces in CP^n(rho) and the closed-form
 *        algebra of the pmc classification.
 *
 * A surface is biharmonic iff the normal and tangent parts of the bitension
 * field vanish:
 *
 *   normal:  -Delta-perp H + trace sigma(., A_H .) + trace (R(., H).)^perp = 0
 *   tangent: grad |H|^2 + 2 trace A_{nabla-perp H}(.) + 2 trace (R(., H).)^T = 0
 *
 * with Delta-perp = -trace nabla-perp^2 (the rough Laplacian, non-negative).
 * On pmc surfaces these reduce to
 *
 *   trace sigma(., A_H .) = (rho/4)(2H - 3 (JT)^perp),   (JT)^T = 0,
 *
 * which implies |A_H|^2 = (rho/4)(2|H|^2 + 3|T|^2).
 */

#include <Eigen/Dense>
#include <map>
#include <string>

#include "cpbih/surfaces.hpp"

namespace cpbih {

struct BitensionResidual {
  double normal = 0.0;
  double tangent = 0.0;
  ComplexVector normal_vector;
  ComplexVector tangent_vector;
};

/// Both parts of the bitension field at (u, v), from fourth-order jets.
BitensionResidual bitension_residual(const Chart& chart, double u, double v);

/// trace nabla-perp^2 H (that is, -Delta-perp H) from fourth-order jets.
ComplexVector rough_normal_laplacian(const Chart& chart, double u, double v);

struct PmcBiharmonicResidual {
  double trace_residual = 0.0;  ///< |trace sigma(., A_H .) - (rho/4)(2H - 3(JT)^perp)|
  double jt_tangent = 0.0;      ///< |(JT)^T|
  double ah_identity = 0.0;     ///< ||A_H|^2 - (rho/4)(2|H|^2 + 3|T|^2)|
  double pmc = 0.0;             ///< |nabla-perp_{E1} H| + |nabla-perp_{E2} H|
  bool pmc_warning = false;     ///< pmc exceeded the tolerance: the reduction does not apply
  bool minimal = false;         ///< |H| below the minimality threshold: not proper
};

/// Evaluates the pmc reduction on precomputed data.
PmcBiharmonicResidual pmc_biharmonic_residual(const FundamentalData& data, double pmc_tol = 1e-8,
                                              double minimal_tol = 1e-8);

PmcBiharmonicResidual pmc_biharmonic_residual(const Chart& chart, double u, double v,
                                              double pmc_tol = 1e-8, double minimal_tol = 1e-8);

/**
 * Case |T| < |H| of the pmc biharmonic classification in the adapted frame
 * E1 = T/|T|, E2, E3 = JE1, E4 = JE2, E5 = JN/|N|, E6 = N/|N|, where
 * H = -|T| E3 - |N| E5.
 */
struct CaseIIData {
  double rho = 0.0;
  double h2 = 0.0;
  double t2 = 0.0;
  double n2 = 0.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  Eigen::Matrix2d a3, a4, a5, a6;  ///< a5 is the trace-consistent diag(c - |N|, -c - |N|)
  Eigen::Matrix2d a5_printed;      ///< -(1/2) sqrt(5 rho/3) diag(-1/3, 1)
  Eigen::Matrix2d a5_typo;         ///< diag(c - |N|, -c - |T|)
  /// Named residuals of the structure equations at the solution:
  ///   commuting_a3_a5   ad - bc
  ///   ricci_a4          b(b|T| + d|N|) + (a + |T|)(a|T| + c|N|) - rho|T|/8
  ///   trace_ah_a4       b|T| + d|N|
  ///   trace_ah_a3       a(a|T| + c|N|) - (5 rho - 8|H|^2)|T|/8
  ///   trace_ah_a5       c(a|T| + c|N|) - (rho - 4|H|^2)|N|/4
  ///   closed_form_ac    a and c against their closed forms
  ///   biharmonic_poly   16|H|^4 - 10 rho|H|^2 - 3 rho|T|^2 + 2 rho^2
  ///   flatness_poly     16|H|^4 + 4 rho|H|^2 - 48|T|^2|H|^2 + 22 rho|T|^2 - 4 rho^2
  ///   trace_a3, trace_a4, trace_a5, a6
  std::map<std::string, double> residuals;

  double t() const;
  double n() const;
  /// rho/4 + sum det A_alpha with the trace-consistent A5.
  double gauss_k() const;
  /// Same sum with A5 replaced by `a5_alt`.
  double gauss_k_with(const Eigen::Matrix2d& a5_alt) const;
  /// The Gauss sum after rotating (E3, E5) to (H/|H|, its complement).
  double gauss_k_h_frame() const;
  /// A_H = -|T| A3 - |N| A5.
  Eigen::Matrix2d a_h() const;
  /// |sigma(E1, E1)|.
  double sigma11_norm() const;
};

/// Solves the Case II system for (|H|^2, |T|^2), selecting the unique root with
/// 0 < |T|^2 < |H|^2 and 2|H|^2 != rho, then assembles the shape operators.
/// Throws DomainError for rho <= 0, InconsistencyError when no root qualifies.
CaseIIData solve_case_ii(double rho);

/// The two polynomial constraints at arbitrary (|H|^2, |T|^2): the first
/// comes from the biharmonic equation, the second from flatness.
double case_ii_biharmonic_poly(double rho, double h2, double t2);
double case_ii_flatness_poly(double rho, double h2, double t2);

/// |H| = sqrt(rho)/2 for pseudo-umbilical pmc biharmonic surfaces.
double case_i_mean_curvature(double rho);

/// |2|H|^4 - (rho/2)|H|^2| at |H| = case_i_mean_curvature(rho).
double case_i_consistency_residual(double rho);

}  // namespace cpbih

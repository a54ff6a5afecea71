#pragma once

/**
 * @file simons.hpp
 * @brief The quadratic form Q, its traceless operator S, and the Simons-type
 *        identity for pmc surfaces in CP^n(rho).
 *
 *   Q(X,Y) = 8|H|^2 <A_H X, Y> + 3 rho <X,T><Y,T>
 *   S      = 8|H|^2 A_H + 3 rho <T,.>T - ((3 rho/2)|T|^2 + 8|H|^4) id
 *
 * so that <SX,Y> = Q(X,Y) - (trace Q/2)<X,Y>. On a pmc surface S is a
 * traceless Codazzi operator and satisfies
 *
 *   (1/2) Delta |S|^2 = 2K|S|^2 + |nabla S|^2,
 *
 * with Delta the Laplace-Beltrami operator (div grad).
 */

#include <Eigen/Dense>
#include <optional>

#include "cpbih/surfaces.hpp"

namespace cpbih {

struct SimonsState {
  Eigen::Matrix2d q;
  Eigen::Matrix2d s;
  Eigen::Matrix2d phi_h;  ///< traceless part of A_H
  double norm_s = 0.0;
  double bound = 0.0;     ///< s_bound(rho, |H|^2); NaN when |H| < 1e-8 or rho = 0
  double sq_residual = 0.0;  ///< max |S - (Q - trace Q/2 id)|, computed from the direct formula
};

/// Q on the orthonormal tangent frame.
Eigen::Matrix2d q_form(const FundamentalData& data, double rho);

/// S from its direct formula together with the consistency check against Q.
SimonsState s_operator(const FundamentalData& data, double rho);

struct SimonsResidual {
  double identity = 0.0;      ///< (1/2) Delta|S|^2 - 2K|S|^2 - |nabla S|^2
  double grad_s = 0.0;        ///< |nabla S|
  double laplacian = 0.0;     ///< Delta |S|^2 from jets
  double laplacian_fd = 0.0;  ///< Delta |S|^2 from central differences of |S|^2
  double codazzi = 0.0;       ///< |(nabla_{E1} S)E2 - (nabla_{E2} S)E1|
  double k = 0.0;
  double norm_s2 = 0.0;
};

/// Evaluates the identity at (u, v) from fourth-order jets; `fd_step` sets the
/// independent finite-difference path for Delta|S|^2.
SimonsResidual simons_residual(const Chart& chart, double u, double v, double fd_step = 1e-3);

/// |K_formula - K_gauss|; empty when |H| vanishes (the formula divides by |H|^6).
std::optional<double> k_formula_residual(const FundamentalData& data, const SimonsState& simons, double rho,
                                         double minimal_tol = 1e-8);

/// K from the Kahler angle, |H|, |S|, |T| and the normal shape operators
/// orthogonal to H; empty when |H| vanishes.
std::optional<double> k_formula(const FundamentalData& data, const SimonsState& simons, double rho,
                                double minimal_tol = 1e-8);

/// Upper bound for |S| on a pmc surface with K >= 0. Throws DomainError for
/// rho = 0 or h2 <= 0.
double s_bound(double rho, double h2);

/// |<ST,T>| / (|T|^2 |S|); NaN when T or S vanishes.
double st_t_ratio(const FundamentalData& data, const SimonsState& simons);

/// |d/d zbar Q(d_z, d_z)| in the chart coordinates z = u + iv. Throws
/// DomainError unless the chart metric is conformal at the point to
/// `conformal_tol`.
double holomorphicity_defect(const Chart& chart, double u, double v, double conformal_tol = 1e-8);

}  // namespace cpbih

#pragma once

/**
 * @file surfaces.hpp
 * @brief Pointwise geometry of an immersed surface in CP^n(rho).
 *
 * Charts supply arbitrary lifts into C^{n+1} \ {0}: neither horizontality
 * nor normalisation is required. Everything reported here is invariant under
 * the gauge change f -> e^{i phi(u,v)} f up to the corresponding phase on
 * lifted vectors.
 */

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "cpbih/calculus.hpp"
#include "cpbih/surface_jets.hpp"

namespace cpbih {

struct Domain {
  double u0 = 0.0, u1 = 1.0;
  double v0 = 0.0, v1 = 1.0;
};

struct Chart {
  ParamMap map;
  double rho = 4.0;
  Domain domain;
  std::string name;
};

/// A regular nu x nv sample of the chart domain at cell centres, so every
/// point is interior.
struct Grid {
  int nu = 20;
  int nv = 20;
};

struct SamplePoint {
  double u;
  double v;
};

std::vector<SamplePoint> sample_points(const Domain& domain, const Grid& grid);

struct FundamentalData {
  double rho = 0.0;
  ComplexVector z;                                    ///< lift on S^{2n+1}(rho/4)
  Eigen::Matrix2d g;                                  ///< metric in (u, v)
  std::array<ComplexVector, 2> frame;                 ///< E1, E2
  std::vector<ComplexVector> normal_frame;            ///< orthonormal; H/|H| first when H != 0
  std::array<std::array<ComplexVector, 2>, 2> sigma;  ///< sigma(E_k, E_l)
  std::vector<Eigen::Matrix2d> shape;                 ///< A for each normal_frame vector
  ComplexVector h;                                    ///< mean curvature vector
  double h_norm = 0.0;
  Eigen::Matrix2d a_h;                                ///< A_H in the frame E
  std::array<ComplexVector, 2> dperp_h;               ///< nabla-perp_{E_k} H
  ComplexVector t;                                    ///< tangent part of JH
  Eigen::Vector2d t_frame;                            ///< T in the frame E
  ComplexVector n_part;                               ///< normal part of JH
  double cos_theta = 0.0;                             ///< <J E1, E2>
  double k_intrinsic = 0.0;                           ///< from the metric
  double k_gauss = 0.0;                               ///< from the Gauss equation

  /// sum over the normal frame of det A_alpha (frame independent).
  double sum_det_shape() const;
};

/// Assembles FundamentalData from jets of order >= 3.
template <int N>
FundamentalData to_fundamental_data(const SurfaceJets<N>& s);

/// Throws ImmersionError, DegenerateError or EvaluationError at bad points.
FundamentalData fundamental_data(const Chart& chart, double u, double v);

/// sup over the grid of |nabla-perp_{E1} H| + |nabla-perp_{E2} H|.
double pmc_residual(const Chart& chart, const Grid& grid);

/// Largest change of any FundamentalData output (phase removed from lifted
/// vectors) between `chart` and e^{i phase} chart at (u, v).
double gauge_invariance_check(const Chart& chart, const Polynomial2& phase, double u, double v);

/// Orthonormal completion of span(E1, E2) inside the horizontal space, seeded by
/// H (if non-zero), J E1, J E2 and then the coordinate directions.
std::vector<ComplexVector> normal_frame(const ComplexVector& z, const std::array<ComplexVector, 2>& frame,
                                        const ComplexVector& h);

}  // namespace cpbih

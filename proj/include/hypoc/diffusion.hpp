#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <vector>

#include "hypoc/potential.hpp"

namespace hypoc {

// Variable second-order coefficient field Sigma(y) = sigma sigma^T on R^d2,
// together with the bounds the convergence analysis needs. coeff_grad
// returns one matrix per coordinate k with entries (i,j) = d_k Sigma_ij(y).
struct DiffusionField {
  enum class Family { Identity, ScalarBounded, DiagonalBounded, Custom };

  Family family = Family::Custom;
  int dim = 1;

  std::function<Matrix(const Vector&)> coeff;
  std::function<std::vector<Matrix>(const Vector&)> coeff_grad;
  bool constant = false;  // gradient vanishes identically

  double ellipticity = 1.0;      // c_Sigma: <v,Sigma v> >= |v|^2 / c_Sigma
  double sup_coeff = 1.0;        // M_Sigma = max_ij sup |Sigma_ij|
  double unit_ball_grad = 0.0;   // B_Sigma = max |d_j Sigma_ij| on |y|<=1
  double grad_growth = 0.0;      // M: |d_k Sigma_ij| <= M (1_{B_1} + |y|^beta)
  double grad_growth_exp = 0.0;  // beta in [0,1)
  double grad_integrability =
      std::numeric_limits<double>::infinity();  // p_Sigma

  // N_Sigma = sqrt(M_Sigma^2 + B_Sigma^2 + d2 M^2).
  double combined_bound() const {
    return std::sqrt(sup_coeff * sup_coeff + unit_ball_grad * unit_ball_grad +
                     dim * grad_growth * grad_growth);
  }

  static DiffusionField identity(int dim);
  // Sigma(y) = (1 + s |y|^2 / (1 + |y|^2)) I, bounded with bounded gradient.
  static DiffusionField scalar_bounded(int dim, double scale);
  // Sigma_ii(y) = 1 + s_i y_i^2 / (1 + y_i^2), off-diagonal zero.
  static DiffusionField diagonal_bounded(const Vector& scales);
};

// Worst absolute mismatch between coeff_grad and finite differences of coeff.
double diffusion_fd_error(const DiffusionField& field, const Matrix& probes);

}  // namespace hypoc

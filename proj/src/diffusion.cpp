#include "hypoc/diffusion.hpp"

#include <cmath>
#include <stdexcept>

namespace hypoc {

namespace {
// max_t 2 t / (1+t^2)^2 = 3 sqrt(3) / 8, attained at t = 1/sqrt(3).
const double kBoundedGradMax = 3.0 * std::sqrt(3.0) / 8.0;
}  // namespace

DiffusionField DiffusionField::identity(int dim) {
  DiffusionField field;
  field.family = Family::Identity;
  field.dim = dim;
  field.constant = true;
  field.coeff = [dim](const Vector&) -> Matrix {
    return Matrix::Identity(dim, dim);
  };
  field.coeff_grad = [dim](const Vector&) {
    return std::vector<Matrix>(dim, Matrix::Zero(dim, dim));
  };
  field.ellipticity = 1.0;
  field.sup_coeff = 1.0;
  field.unit_ball_grad = 0.0;
  field.grad_growth = 0.0;
  field.grad_growth_exp = 0.0;
  return field;
}

DiffusionField DiffusionField::scalar_bounded(int dim, double scale) {
  if (scale < 0.0)
    throw std::invalid_argument("scalar_bounded: scale must be >= 0");
  DiffusionField field;
  field.family = Family::ScalarBounded;
  field.dim = dim;
  field.coeff = [dim, scale](const Vector& y) -> Matrix {
    const double s = y.squaredNorm();
    return (1.0 + scale * s / (1.0 + s)) * Matrix::Identity(dim, dim);
  };
  field.coeff_grad = [dim, scale](const Vector& y) {
    const double s = 1.0 + y.squaredNorm();
    std::vector<Matrix> grad(dim);
    for (int k = 0; k < dim; ++k) {
      grad[k] = (scale * 2.0 * y[k] / (s * s)) * Matrix::Identity(dim, dim);
    }
    return grad;
  };
  field.ellipticity = 1.0;
  field.sup_coeff = 1.0 + scale;
  field.unit_ball_grad = kBoundedGradMax * scale;
  field.grad_growth = kBoundedGradMax * scale;
  field.grad_growth_exp = 0.0;
  return field;
}

DiffusionField DiffusionField::diagonal_bounded(const Vector& scales) {
  for (Eigen::Index i = 0; i < scales.size(); ++i) {
    if (scales[i] < 0.0)
      throw std::invalid_argument("diagonal_bounded: scales must be >= 0");
  }
  const int dim = static_cast<int>(scales.size());
  DiffusionField field;
  field.family = Family::DiagonalBounded;
  field.dim = dim;
  field.coeff = [dim, scales](const Vector& y) -> Matrix {
    Matrix m = Matrix::Identity(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const double s = y[i] * y[i];
      m(i, i) = 1.0 + scales[i] * s / (1.0 + s);
    }
    return m;
  };
  field.coeff_grad = [dim, scales](const Vector& y) {
    std::vector<Matrix> grad(dim, Matrix::Zero(dim, dim));
    for (int i = 0; i < dim; ++i) {
      const double s = 1.0 + y[i] * y[i];
      grad[i](i, i) = scales[i] * 2.0 * y[i] / (s * s);
    }
    return grad;
  };
  field.ellipticity = 1.0;
  field.sup_coeff = 1.0 + scales.maxCoeff();
  field.unit_ball_grad = kBoundedGradMax * scales.maxCoeff();
  field.grad_growth = kBoundedGradMax * scales.maxCoeff();
  field.grad_growth_exp = 0.0;
  return field;
}

double diffusion_fd_error(const DiffusionField& field, const Matrix& probes) {
  constexpr double step = 1e-5;
  double worst = 0.0;
  for (Eigen::Index r = 0; r < probes.rows(); ++r) {
    const Vector y = probes.row(r).transpose();
    const std::vector<Matrix> grad = field.coeff_grad(y);
    for (int k = 0; k < field.dim; ++k) {
      Vector yp = y, ym = y;
      yp[k] += step;
      ym[k] -= step;
      const Matrix fd = (field.coeff(yp) - field.coeff(ym)) / (2.0 * step);
      worst = std::max(worst, (fd - grad[k]).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace hypoc

#include "hypoc/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace hypoc {

PotentialSpec PotentialSpec::power_law(int dim, double kappa, double eps) {
  if (dim < 1) throw std::invalid_argument("power_law: dim must be positive");
  if (kappa <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("power_law: kappa and eps must be positive");
  PotentialSpec pot;
  pot.family = Family::PowerLaw;
  pot.dim = dim;
  pot.power_coef = kappa;
  pot.power_exponent = eps;
  pot.value = [kappa, eps](const Vector& x) {
    return kappa * std::pow(1.0 + x.squaredNorm(), 0.5 * eps);
  };
  pot.gradient = [kappa, eps](const Vector& x) -> Vector {
    const double s = 1.0 + x.squaredNorm();
    return kappa * eps * std::pow(s, 0.5 * eps - 1.0) * x;
  };
  pot.hessian = [kappa, eps](const Vector& x) -> Matrix {
    const double s = 1.0 + x.squaredNorm();
    const double p = std::pow(s, 0.5 * eps - 2.0);
    Matrix h = kappa * eps * p *
               ((eps - 2.0) * (x * x.transpose()) +
                s * Matrix::Identity(x.size(), x.size()));
    return h;
  };
  return pot;
}

PotentialSpec PotentialSpec::log_power(int dim, double p) {
  if (dim < 1) throw std::invalid_argument("log_power: dim must be positive");
  PotentialSpec pot;
  pot.family = Family::LogPower;
  pot.dim = dim;
  pot.log_tail = p;
  const double c = 0.5 * (p + dim);
  pot.value = [c](const Vector& x) {
    return c * std::log1p(x.squaredNorm());
  };
  pot.gradient = [c](const Vector& x) -> Vector {
    return (2.0 * c / (1.0 + x.squaredNorm())) * x;
  };
  pot.hessian = [c](const Vector& x) -> Matrix {
    const double s = 1.0 + x.squaredNorm();
    return (2.0 * c / s) * Matrix::Identity(x.size(), x.size()) -
           (4.0 * c / (s * s)) * (x * x.transpose());
  };
  return pot;
}

PotentialSpec PotentialSpec::quadratic(const Matrix& lambda,
                                       const Vector& shift) {
  if (lambda.rows() != lambda.cols() || lambda.rows() != shift.size())
    throw std::invalid_argument("quadratic: Lambda must be d x d, shift d");
  Eigen::FullPivLU<Matrix> lu(lambda);
  if (!lu.isInvertible())
    throw std::invalid_argument("quadratic: Lambda must be invertible");
  PotentialSpec pot;
  pot.family = Family::Quadratic;
  pot.dim = static_cast<int>(lambda.rows());
  pot.quad_matrix = lambda;
  pot.quad_shift = shift;
  const Matrix gram = lambda.transpose() * lambda;
  pot.value = [lambda, shift](const Vector& x) {
    return 0.5 * (lambda * x - shift).squaredNorm();
  };
  pot.gradient = [lambda, shift](const Vector& x) -> Vector {
    return lambda.transpose() * (lambda * x - shift);
  };
  pot.hessian = [gram](const Vector&) -> Matrix { return gram; };
  // |D2 V| is the constant |Lambda^T Lambda|_F, so K = C = that constant.
  const double frob = gram.norm();
  pot.hessian_growth_K = frob;
  pot.hessian_growth_alpha = 1.0;
  pot.hessian_bound_C = frob;
  return pot;
}

PotentialSpec PotentialSpec::quadratic(int dim) {
  return quadratic(Matrix::Identity(dim, dim), Vector::Zero(dim));
}

PotentialSpec PotentialSpec::custom(
    int dim, std::function<double(const Vector&)> value,
    std::function<Vector(const Vector&)> gradient,
    std::function<Matrix(const Vector&)> hessian) {
  PotentialSpec pot;
  pot.family = Family::Custom;
  pot.dim = dim;
  pot.value = std::move(value);
  pot.gradient = std::move(gradient);
  pot.hessian = std::move(hessian);
  return pot;
}

namespace {

// Central difference step tuned for ~1e-10 truncation + rounding balance.
constexpr double kFdStep = 1e-5;

}  // namespace

double gradient_fd_error(const PotentialSpec& pot, const Matrix& probes) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < probes.rows(); ++r) {
    const Vector x = probes.row(r).transpose();
    const Vector g = pot.gradient(x);
    double scale = std::max(1.0, g.norm());
    for (int i = 0; i < pot.dim; ++i) {
      Vector xp = x, xm = x;
      xp[i] += kFdStep;
      xm[i] -= kFdStep;
      const double fd = (pot.value(xp) - pot.value(xm)) / (2.0 * kFdStep);
      worst = std::max(worst, std::abs(fd - g[i]) / scale);
    }
  }
  return worst;
}

double hessian_fd_error(const PotentialSpec& pot, const Matrix& probes) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < probes.rows(); ++r) {
    const Vector x = probes.row(r).transpose();
    const Matrix h = pot.hessian(x);
    double scale = std::max(1.0, h.norm());
    for (int i = 0; i < pot.dim; ++i) {
      Vector xp = x, xm = x;
      xp[i] += kFdStep;
      xm[i] -= kFdStep;
      const Vector fd = (pot.gradient(xp) - pot.gradient(xm)) / (2.0 * kFdStep);
      worst = std::max(worst, (fd - h.col(i)).cwiseAbs().maxCoeff() / scale);
    }
  }
  return worst;
}

std::string family_name(PotentialSpec::Family family) {
  switch (family) {
    case PotentialSpec::Family::PowerLaw:
      return "powerlaw";
    case PotentialSpec::Family::LogPower:
      return "logpower";
    case PotentialSpec::Family::Quadratic:
      return "quadratic";
    case PotentialSpec::Family::Custom:
      return "custom";
  }
  return "custom";
}

}  // namespace hypoc

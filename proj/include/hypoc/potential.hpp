#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

namespace hypoc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// A confining potential V: R^d -> R with analytic first and second
// derivatives. The built-in families carry enough parametric knowledge for
// exact tail bounds and (for the quadratic family) exact sampling; everything
// else goes through the callbacks.
struct PotentialSpec {
  enum class Family { PowerLaw, LogPower, Quadratic, Custom };

  Family family = Family::Custom;
  int dim = 1;

  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<Matrix(const Vector&)> hessian;

  // Growth metadata. Optional; probe-estimated by the condition validator
  // when absent, supplied values take precedence.
  std::optional<double> hessian_growth_K;      // |D2 V| <= K (1 + |DV|^alpha)
  std::optional<double> hessian_growth_alpha;  // alpha in [1,2)
  std::optional<double> hessian_bound_C;       // |D2 V| <= C (1 + |DV|)
  std::optional<double> gradient_growth_N;     // |DV| <= N (1 + |x|^gamma)
  std::optional<double> gradient_growth_gamma;

  // Family parameters (meaningful only for the matching family).
  double power_coef = 0.0;      // kappa: V = kappa (1+|x|^2)^(eps/2)
  double power_exponent = 0.0;  // eps
  double log_tail = 0.0;        // p: V = ((p+d)/2) log(1+|x|^2)
  Matrix quad_matrix;           // Lambda: V = |Lambda x - a|^2 / 2
  Vector quad_shift;            // a

  bool is_builtin() const { return family != Family::Custom; }

  // V(x) = kappa (1 + |x|^2)^(eps/2), kappa > 0, eps > 0.
  static PotentialSpec power_law(int dim, double kappa, double eps);
  // V(x) = ((p + d)/2) log(1 + |x|^2), integrable iff p > 0.
  static PotentialSpec log_power(int dim, double p);
  // V(x) = |Lambda x - a|^2 / 2 with invertible Lambda.
  static PotentialSpec quadratic(const Matrix& lambda, const Vector& shift);
  static PotentialSpec quadratic(int dim);  // Lambda = I, a = 0
  static PotentialSpec custom(int dim,
                              std::function<double(const Vector&)> value,
                              std::function<Vector(const Vector&)> gradient,
                              std::function<Matrix(const Vector&)> hessian);
};

// Worst relative mismatch between the gradient callback and central finite
// differences of the value callback over the probe points (rows of `probes`).
double gradient_fd_error(const PotentialSpec& pot, const Matrix& probes);
// Same for the Hessian callback against finite differences of the gradient.
double hessian_fd_error(const PotentialSpec& pot, const Matrix& probes);

std::string family_name(PotentialSpec::Family family);

}  // namespace hypoc

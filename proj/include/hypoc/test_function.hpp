#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypoc/potential.hpp"

namespace hypoc {

// Scalar observable f on E = R^d1 x R^d2 with analytic derivative callbacks.
// The operator evaluations never differentiate numerically; everything the
// generator needs is supplied here.
struct TestFunction {
  int dim_x = 1;
  int dim_y = 1;
  std::string name;
  std::optional<double> support_radius;

  std::function<double(const Vector&, const Vector&)> value;
  std::function<Vector(const Vector&, const Vector&)> grad_x;
  std::function<Vector(const Vector&, const Vector&)> grad_y;
  std::function<Matrix(const Vector&, const Vector&)> hess_x;
  std::function<Matrix(const Vector&, const Vector&)> hess_y;
};

// Univariate factor with two derivatives; building block for pure tensors.
struct UniFactor {
  std::function<double(double)> v;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

UniFactor uni_one();
UniFactor uni_coord();
UniFactor uni_square();
UniFactor uni_sin();
UniFactor uni_tanh();
// C_c^infty mollifier: exp(1 - 1/(1 - (t/r)^2)) on |t| < r, zero outside.
UniFactor uni_bump(double radius);
UniFactor uni_gauss();
UniFactor uni_mul(const UniFactor& a, const UniFactor& b);

// f(x,y) = prod_i fx[i](x_i) * prod_j fy[j](y_j).
TestFunction separable(std::vector<UniFactor> fx, std::vector<UniFactor> fy,
                       std::string name,
                       std::optional<double> support_radius = std::nullopt);

// Named observables for configs and tests. Throws on unknown name.
// Available: x, y, x2, xy, tanh_x, sin_x, gauss, bump, x_bump, y_bump,
// xy_bump, sin_bump (bump variants take the support radius as parameter).
TestFunction catalog_function(const std::string& name, int dim_x, int dim_y,
                              double bump_radius = 5.0);

// Worst relative finite-difference mismatch of all derivative callbacks over
// probe points (rows carry concatenated (x,y) coordinates).
double test_function_fd_error(const TestFunction& f, const Matrix& probes);

}  // namespace hypoc

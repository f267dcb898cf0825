#include "diskinterp/interpolation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "diskinterp/errors.hpp"

namespace diskinterp {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Unisolvent ? "unisolvent" : "singular";
}

VandermondeSystem::VandermondeSystem(BallConfig config, BasisSpec basis)
    : config_(std::move(config)), basis_(basis) {
  if (basis_.degree != config_.degree)
    throw ConfigError("basis degree " + std::to_string(basis_.degree) +
                      " does not match configuration degree " + std::to_string(config_.degree));
  const auto n = basis_.size();
  if (config_.balls.size() != n)
    throw ConfigError("configuration has " + std::to_string(config_.balls.size()) +
                      " balls, basis has " + std::to_string(n) + " functions");

  v_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto column = basis_integrals_over_ball(basis_, config_.balls[j]);
    for (std::size_t i = 0; i < n; ++i) v_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = column[i];
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(v_);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  sigma_ratio_ = smax > 0.0 ? smin / smax : 0.0;
  cond_ = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  lu_.compute(v_);
}

UnisolvenceReport VandermondeSystem::report() const {
  return {singular() ? Verdict::Singular : Verdict::Unisolvent, sigma_ratio_, cond_};
}

void VandermondeSystem::require_unisolvent() const {
  if (singular()) {
    throw UnisolvenceError("configuration '" + config_.label + "' is not unisolvent for degree " +
                               std::to_string(config_.degree) + " (sigma ratio " +
                               std::to_string(sigma_ratio_) + ")",
                           sigma_ratio_);
  }
}

Eigen::VectorXd VandermondeSystem::solve_coefficients(const Eigen::VectorXd& data) const {
  require_unisolvent();
  return lu_.transpose().solve(data);
}

Eigen::MatrixXd VandermondeSystem::apply_inverse_transpose(const Eigen::MatrixXd& w) const {
  require_unisolvent();
  // X V^T = W  <=>  V X^T = W^T
  return lu_.solve(w.transpose()).transpose();
}

VandermondeSystem assemble_vandermonde(const BallConfig& config, const BasisSpec& basis) {
  return VandermondeSystem(config, basis);
}

PolynomialRep LagrangeBasis::function(std::size_t i) const {
  const Eigen::VectorXd row = coefficients.row(static_cast<Eigen::Index>(i));
  return PolynomialRep(basis, std::vector<double>(row.data(), row.data() + row.size()));
}

LagrangeBasis lagrange_coefficients(const VandermondeSystem& system) {
  system.require_unisolvent();
  const auto n = static_cast<Eigen::Index>(system.size());
  // L V = I: L^T = V^{-T}, the inverse-transpose applied to the identity.
  const Eigen::MatrixXd lt = system.apply_inverse_transpose(Eigen::MatrixXd::Identity(n, n));
  return {lt.transpose(), system.basis()};
}

Interpolator::Interpolator(const BallConfig& config, const BasisSpec& basis, PolarRule rule)
    : system_(config, basis), rule_(std::move(rule)) {
  system_.require_unisolvent();
}

PolynomialRep Interpolator::from_data(std::span<const double> data) const {
  if (data.size() != system_.size()) throw ConfigError("data length does not match ball count");
  Eigen::VectorXd g(static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i]))
      throw EvaluationError("data integral over ball " + std::to_string(i) + " is not finite");
    g(static_cast<Eigen::Index>(i)) = data[i];
  }
  const Eigen::VectorXd c = system_.solve_coefficients(g);
  return PolynomialRep(system_.basis(), std::vector<double>(c.data(), c.data() + c.size()));
}

PolynomialRep Interpolator::operator()(const ScalarField& f) const {
  std::vector<double> data;
  data.reserve(system_.size());
  for (const auto& b : system_.config().balls) data.push_back(func_integral_over_ball(f, b, rule_));
  return from_data(data);
}

PolynomialRep Interpolator::operator()(const PolynomialRep& p) const {
  std::vector<double> data;
  data.reserve(system_.size());
  for (const auto& b : system_.config().balls) data.push_back(poly_integral_over_ball(p, b));
  return from_data(data);
}

PolynomialRep interpolate(const ScalarField& f, const BallConfig& config, const BasisSpec& basis,
                          const PolarRule& rule) {
  return Interpolator(config, basis, rule)(f);
}

PolynomialRep interpolate(const PolynomialRep& p, const BallConfig& config, const BasisSpec& basis) {
  return Interpolator(config, basis)(p);
}

UnisolvenceReport check_unisolvence(const BallConfig& config, const BasisSpec& basis) {
  return VandermondeSystem(config, basis).report();
}

}  // namespace diskinterp

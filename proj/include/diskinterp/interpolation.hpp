#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "diskinterp/cubature.hpp"
#include "diskinterp/geometry.hpp"
#include "diskinterp/polyspace.hpp"

namespace diskinterp {

// sigma_min / sigma_max at or below this value is reported as singular.
inline constexpr double kSingularThreshold = 1e-12;

enum class Verdict { Unisolvent, Singular };

std::string_view to_string(Verdict verdict);

struct UnisolvenceReport {
  Verdict verdict = Verdict::Singular;
  double sigma_ratio = 0.0;
  double cond = 0.0;
};

// V(i, j) = \int_{B_j} p_i, rows in basis order, columns in ball order,
// together with its LU factorization and singular-value report.
class VandermondeSystem {
 public:
  VandermondeSystem(BallConfig config, BasisSpec basis);

  const Eigen::MatrixXd& matrix() const noexcept { return v_; }
  const BasisSpec& basis() const noexcept { return basis_; }
  const BallConfig& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(v_.rows()); }

  // sigma_max / sigma_min (2-norm condition number); +inf when singular.
  double cond_estimate() const noexcept { return cond_; }
  double sigma_ratio() const noexcept { return sigma_ratio_; }
  bool singular() const noexcept { return sigma_ratio_ <= kSingularThreshold; }
  UnisolvenceReport report() const;

  // Throws UnisolvenceError when singular().
  void require_unisolvent() const;

  // Coefficients c with \int_{B_i} sum_j c_j p_j = data_i, i.e. V^T c = data.
  Eigen::VectorXd solve_coefficients(const Eigen::VectorXd& data) const;

  // W V^{-T}: entry (k, i) is \int_{D_k} l_{B_i} when W(k, t) = \int_{D_k} p_t.
  Eigen::MatrixXd apply_inverse_transpose(const Eigen::MatrixXd& w) const;

 private:
  BallConfig config_;
  BasisSpec basis_;
  Eigen::MatrixXd v_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double cond_ = 0.0;
  double sigma_ratio_ = 0.0;
};

VandermondeSystem assemble_vandermonde(const BallConfig& config, const BasisSpec& basis);

// Row i holds the coefficients of l_{B_i} in the working basis.
struct LagrangeBasis {
  Eigen::MatrixXd coefficients;
  BasisSpec basis;

  PolynomialRep function(std::size_t i) const;
};

LagrangeBasis lagrange_coefficients(const VandermondeSystem& system);

// Interpolation operator for a fixed configuration and basis; factor once,
// apply to many functions.
class Interpolator {
 public:
  Interpolator(const BallConfig& config, const BasisSpec& basis,
               PolarRule rule = PolarRule::standard());

  const VandermondeSystem& system() const noexcept { return system_; }
  const PolarRule& rule() const noexcept { return rule_; }

  // Pi f from the data integrals \int_{B_i} f.
  PolynomialRep from_data(std::span<const double> data) const;
  // Data integrals by the polar rule.
  PolynomialRep operator()(const ScalarField& f) const;
  // Data integrals by the exact path.
  PolynomialRep operator()(const PolynomialRep& p) const;

 private:
  VandermondeSystem system_;
  PolarRule rule_;
};

PolynomialRep interpolate(const ScalarField& f, const BallConfig& config, const BasisSpec& basis,
                          const PolarRule& rule = PolarRule::standard());
PolynomialRep interpolate(const PolynomialRep& p, const BallConfig& config, const BasisSpec& basis);

UnisolvenceReport check_unisolvence(const BallConfig& config, const BasisSpec& basis);

}  // namespace diskinterp

#pragma once

#include <functional>
#include <vector>

#include "diskinterp/geometry.hpp"
#include "diskinterp/polyspace.hpp"

namespace diskinterp {

using ScalarField = std::function<double(Point2)>;

// Unit-disc moments M(a, b) = \int_{B(0,1)} x^a y^b dA for a + b <= degree.
// Entries are exact rationals times pi, rounded once to double.
class MomentTable {
 public:
  explicit MomentTable(int degree);

  int degree() const noexcept { return degree_; }
  // Throws DomainError when a + b exceeds degree().
  double operator()(int a, int b) const;

 private:
  int degree_;
  std::vector<double> values_;  // graded-lex order
};

// Shared table covering moderate degrees; larger requests are computed
// directly.
double monomial_moment_unit(int a, int b);

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int points);

// Tensor rule on the unit disc in polar coordinates: Gauss-Legendre in the
// radius (weights absorb the r dr Jacobian) times the equispaced trapezoidal
// rule in the angle. Exact for total degree <= min(2m - 2, m_theta - 1).
class PolarRule {
 public:
  PolarRule(int radial_points, int angular_points);

  // Default resolution for general integrands.
  static PolarRule standard() { return PolarRule(30, 61); }
  // Smallest rule that integrates every polynomial of total degree <= degree.
  static PolarRule exact_for_degree(int degree);

  int radial_points() const noexcept { return static_cast<int>(radii_.size()); }
  int angular_points() const noexcept { return angular_points_; }
  int exact_degree() const noexcept;

  // Integral of f over the given ball.
  double integrate(const ScalarField& f, const Ball& ball) const;

 private:
  std::vector<double> radii_;
  std::vector<double> radial_weights_;
  std::vector<double> cos_;
  std::vector<double> sin_;
  int angular_points_;
};

// Exact integral of p over the ball: convert to monomials, substitute
// x = cx + r u, y = cy + r v, expand binomially and contract against the
// unit-disc moments.
double poly_integral_over_ball(const PolynomialRep& p, const Ball& ball);

// Integrals of every basis function of spec over the ball, in basis order.
// Each factor T_a(cx + r u) (or (cx + r u)^a) is expanded in u directly by
// its own recurrence, which avoids the cancellation a monomial detour
// suffers for Chebyshev factors.
std::vector<double> basis_integrals_over_ball(const BasisSpec& spec, const Ball& ball);

// Numerical integral of f over the ball with the given rule. Throws
// EvaluationError naming the node when f is not finite there.
double func_integral_over_ball(const ScalarField& f, const Ball& ball,
                               const PolarRule& rule = PolarRule::standard());

}  // namespace diskinterp

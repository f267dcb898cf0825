#include "diskinterp/cubature.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "diskinterp/errors.hpp"

namespace diskinterp {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr int kSharedMomentDegree = 96;

// M(2p, 2q) / pi = (2p - 1)!! (2q - 1)!! / (2^{p+q} (p + q + 1)!).
Rational moment_over_pi(int p, int q) {
  Rational value = 1;
  for (int i = 0; i < q; ++i) value *= Rational(2 * i + 1, 2 * (i + 2));
  // Raising p by one multiplies by (2p + 1) / (2 (p + q + 2)).
  for (int i = 0; i < p; ++i) value *= Rational(2 * i + 1, 2 * (i + q + 2));
  return value;
}

double rational_times_pi(const Rational& r) {
  return static_cast<double>(r) * std::numbers::pi;
}

const MomentTable& shared_moments() {
  static const MomentTable table(kSharedMomentDegree);
  return table;
}

}  // namespace

MomentTable::MomentTable(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("moment table degree must be nonnegative");
  values_.assign(BasisSpec{BasisKind::Monomial, degree}.size(), 0.0);
  // Even-even entries via the exact recurrence along each row of fixed q.
  for (int q = 0; 2 * q <= degree; ++q) {
    Rational value = moment_over_pi(0, q);
    for (int p = 0; 2 * p + 2 * q <= degree; ++p) {
      values_[basis_position({2 * p, 2 * q})] = rational_times_pi(value);
      value *= Rational(2 * p + 1, 2 * (p + q + 2));
    }
  }
}

double MomentTable::operator()(int a, int b) const {
  if (a < 0 || b < 0) throw DomainError("moment exponents must be nonnegative");
  if (a + b > degree_) throw DomainError("moment degree exceeds table degree");
  return values_[basis_position({a, b})];
}

double monomial_moment_unit(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("moment exponents must be nonnegative");
  if (a % 2 != 0 || b % 2 != 0) return 0.0;
  if (a + b <= kSharedMomentDegree) return shared_moments()(a, b);
  return rational_times_pi(moment_over_pi(a / 2, b / 2));
}

GaussLegendreRule gauss_legendre(int points) {
  if (points < 1) throw DomainError("Gauss-Legendre rule needs at least one point");
  GaussLegendreRule rule;
  rule.nodes.assign(points, 0.0);
  rule.weights.assign(points, 0.0);
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // P_n(x) and its derivative from the three-term recurrence.
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  if (points % 2 == 1) rule.nodes[points / 2] = 0.0;
  return rule;
}

PolarRule::PolarRule(int radial_points, int angular_points) : angular_points_(angular_points) {
  if (radial_points < 1 || angular_points < 1)
    throw DomainError("polar rule needs positive point counts");
  const auto gl = gauss_legendre(radial_points);
  for (int i = 0; i < radial_points; ++i) {
    const double rho = 0.5 * (gl.nodes[i] + 1.0);
    radii_.push_back(rho);
    // dr -> (1/2) dt on [0, 1]; the extra rho is the polar Jacobian.
    radial_weights_.push_back(0.5 * gl.weights[i] * rho);
  }
  for (int k = 0; k < angular_points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / angular_points;
    cos_.push_back(std::cos(theta));
    sin_.push_back(std::sin(theta));
  }
}

PolarRule PolarRule::exact_for_degree(int degree) {
  if (degree < 0) throw DomainError("degree must be nonnegative");
  const int m = degree / 2 + 1;
  return PolarRule(m, 2 * m - 1);
}

int PolarRule::exact_degree() const noexcept {
  return std::min(2 * radial_points() - 2, angular_points_ - 1);
}

double PolarRule::integrate(const ScalarField& f, const Ball& ball) const {
  const double r = ball.radius;
  const double angular_weight = 2.0 * std::numbers::pi / angular_points_;
  double sum = 0.0;
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    double ring = 0.0;
    for (int k = 0; k < angular_points_; ++k) {
      const Point2 node{ball.centre.x + r * radii_[i] * cos_[k],
                        ball.centre.y + r * radii_[i] * sin_[k]};
      const double value = f(node);
      if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrand is not finite at node (" << node.x << ", " << node.y << ")";
        throw EvaluationError(msg.str());
      }
      ring += value;
    }
    sum += radial_weights_[i] * ring;
  }
  return sum * angular_weight * r * r;
}

double poly_integral_over_ball(const PolynomialRep& p, const Ball& ball) {
  const auto mono = to_monomial(p);
  const int d = mono.basis().degree;
  const auto fx = shifted_factor_table(BasisKind::Monomial, d, ball.centre.x, ball.radius);
  const auto fy = shifted_factor_table(BasisKind::Monomial, d, ball.centre.y, ball.radius);
  const auto index = enumerate_basis(mono.basis());
  double sum = 0.0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    const double c = mono.coeffs()[k];
    if (c == 0.0) continue;
    const auto& ex = fx[index[k].a];
    const auto& ey = fy[index[k].b];
    double term = 0.0;
    for (std::size_t i = 0; i < ex.size(); i += 2)
      for (std::size_t j = 0; j < ey.size(); j += 2)
        term += ex[i] * ey[j] * monomial_moment_unit(static_cast<int>(i), static_cast<int>(j));
    sum += c * term;
  }
  return sum * ball.radius * ball.radius;
}

std::vector<double> basis_integrals_over_ball(const BasisSpec& spec, const Ball& ball) {
  const int d = spec.degree;
  const auto fx = shifted_factor_table(spec.kind, d, ball.centre.x, ball.radius);
  const auto fy = shifted_factor_table(spec.kind, d, ball.centre.y, ball.radius);
  // Partial contractions G[a][j] = sum_i fx[a][i] M(i, j), j even, i + j <= d.
  std::optional<MomentTable> local;
  if (d > kSharedMomentDegree) local.emplace(d);
  const MomentTable& moments = local ? *local : shared_moments();
  std::vector<std::vector<double>> partial(d + 1, std::vector<double>(d + 1, 0.0));
  for (int a = 0; a <= d; ++a)
    for (int j = 0; j + a <= d; j += 2) {
      double s = 0.0;
      for (int i = 0; i <= a; i += 2) s += fx[a][i] * moments(i, j);
      partial[a][j] = s;
    }
  const double area_scale = ball.radius * ball.radius;
  std::vector<double> out;
  out.reserve(spec.size());
  for (int total = 0; total <= d; ++total) {
    for (int a = total; a >= 0; --a) {
      const int b = total - a;
      double s = 0.0;
      for (int j = 0; j <= b; j += 2) s += partial[a][j] * fy[b][j];
      out.push_back(s * area_scale);
    }
  }
  return out;
}

double func_integral_over_ball(const ScalarField& f, const Ball& ball, const PolarRule& rule) {
  return rule.integrate(f, ball);
}

}  // namespace diskinterp

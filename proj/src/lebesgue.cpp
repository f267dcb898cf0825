#include "diskinterp/lebesgue.hpp"

#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "diskinterp/errors.hpp"

namespace diskinterp {

ProbeFamily gen_probe_family(const ProbeSpec& spec, const BallConfig* supports) {
  if (spec.resolution < 1) throw ConfigError("probe resolution must be at least 1");
  if (spec.radii.empty()) throw ConfigError("probe radius list is empty");
  if (!(spec.domain_radius > 0.0)) throw ConfigError("domain radius must be positive");
  for (double r : spec.radii)
    if (!(r > 0.0)) throw ConfigError("probe radii must be positive");

  const double big = spec.domain_radius;
  const double min_radius = kMinProbeRadiusFraction * big;
  ProbeFamily family;
  family.spec = spec;

  std::set<std::tuple<double, double, double>> seen;
  auto add = [&](const Ball& b) {
    if (seen.emplace(b.centre.x, b.centre.y, b.radius).second) family.discs.push_back(b);
  };

  const int n = spec.resolution;
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const Point2 c = n == 1 ? Point2{0.0, 0.0}
                              : Point2{-big + 2.0 * big * ix / (n - 1), -big + 2.0 * big * iy / (n - 1)};
      const double room = big - std::hypot(c.x, c.y);
      for (double rho : spec.radii) {
        const double r = std::min(rho, room);
        if (r < min_radius) continue;
        add(Ball{c, r});
      }
    }
  }
  if (spec.include_supports && supports != nullptr) {
    for (const auto& b : supports->balls) {
      family.discs.push_back(b);
      ++family.support_count;
    }
  }
  if (family.discs.empty()) throw ConfigError("probe family is empty");
  return family;
}

ProbeFamily transform(const ProbeFamily& probes, const Similarity& phi) {
  ProbeFamily out = probes;
  for (auto& d : out.discs) d = phi.apply(d);
  out.spec.domain_radius = std::abs(phi.scale) * probes.spec.domain_radius;
  return out;
}

std::vector<double> probe_integrals(const ScalarField& f, const ProbeFamily& probes,
                                    const PolarRule& rule) {
  std::vector<double> out;
  out.reserve(probes.size());
  for (const auto& d : probes.discs) out.push_back(func_integral_over_ball(f, d, rule));
  return out;
}

Eigen::MatrixXd probe_basis_matrix(const BasisSpec& basis, const ProbeFamily& probes) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd w(static_cast<Eigen::Index>(probes.size()), n);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const auto row = basis_integrals_over_ball(basis, probes.discs[k]);
    for (Eigen::Index t = 0; t < n; ++t) w(static_cast<Eigen::Index>(k), t) = row[t];
  }
  return w;
}

double ball_norm_from_integrals(std::span<const double> integrals, const ProbeFamily& probes) {
  if (probes.size() == 0) throw ConfigError("probe family is empty");
  if (integrals.size() != probes.size()) throw ConfigError("integral count does not match probes");
  double best = 0.0;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    if (!std::isfinite(integrals[k]))
      throw EvaluationError("integral over probe " + std::to_string(k) + " is not finite");
    best = std::max(best, std::abs(integrals[k]) / ball_volume(probes.discs[k].radius));
  }
  return best;
}

double ball_norm(const ScalarField& f, const ProbeFamily& probes, const PolarRule& rule) {
  return ball_norm_from_integrals(probe_integrals(f, probes, rule), probes);
}

double ball_norm(const PolynomialRep& p, const ProbeFamily& probes) {
  const Eigen::Map<const Eigen::VectorXd> c(p.coeffs().data(), static_cast<Eigen::Index>(p.coeffs().size()));
  const Eigen::VectorXd integrals = probe_basis_matrix(p.basis(), probes) * c;
  return ball_norm_from_integrals({integrals.data(), static_cast<std::size_t>(integrals.size())}, probes);
}

double error_norm_from_integrals(std::span<const double> f_integrals, const PolynomialRep& p,
                                 const ProbeFamily& probes) {
  if (f_integrals.size() != probes.size()) throw ConfigError("integral count does not match probes");
  const Eigen::Map<const Eigen::VectorXd> c(p.coeffs().data(), static_cast<Eigen::Index>(p.coeffs().size()));
  Eigen::VectorXd diff = -(probe_basis_matrix(p.basis(), probes) * c);
  for (std::size_t k = 0; k < f_integrals.size(); ++k) diff(static_cast<Eigen::Index>(k)) += f_integrals[k];
  return ball_norm_from_integrals({diff.data(), static_cast<std::size_t>(diff.size())}, probes);
}

double error_norm(const ScalarField& f, const PolynomialRep& p, const ProbeFamily& probes,
                  const PolarRule& rule) {
  return error_norm_from_integrals(probe_integrals(f, probes, rule), p, probes);
}

LebesgueReport lebesgue_constant(const VandermondeSystem& system, const ProbeFamily& probes) {
  if (probes.size() == 0) throw ConfigError("probe family is empty");
  system.require_unisolvent();
  const auto& config = system.config();
  const Eigen::MatrixXd w = probe_basis_matrix(system.basis(), probes);
  const Eigen::MatrixXd x = system.apply_inverse_transpose(w);  // (k, i) = \int_{D_k} l_{B_i}

  Eigen::VectorXd support_scale(x.cols());
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    const double r = config.balls[static_cast<std::size_t>(i)].radius;
    support_scale(i) = r * r;
  }

  LebesgueReport report;
  report.lambda = -1.0;
  for (Eigen::Index k = 0; k < x.rows(); ++k) {
    const double rho = probes.discs[static_cast<std::size_t>(k)].radius;
    const double row = (x.row(k).cwiseAbs().transpose().cwiseProduct(support_scale)).sum() / (rho * rho);
    if (row > report.lambda) {
      report.lambda = row;
      report.argmax_index = static_cast<std::size_t>(k);
    }
  }
  report.argmax_disc = probes.discs[report.argmax_index];
  report.probe_count = probes.size();
  report.basis_size = system.size();
  report.degree = config.degree;
  report.lower_bound = config.degree >= 1 ? lower_bound(config.degree, 2) : 0.0;
  return report;
}

LebesgueReport lebesgue_constant(const BallConfig& config, const BasisSpec& basis,
                                 const ProbeFamily& probes) {
  return lebesgue_constant(VandermondeSystem(config, basis), probes);
}

double lebesgue_constant_direct(const BallConfig& config, const BasisSpec& basis,
                                const ProbeFamily& probes) {
  const VandermondeSystem system(config, basis);
  const auto lagrange = lagrange_coefficients(system);
  const std::size_t n = system.size();
  const BasisSpec mono{BasisKind::Monomial, basis.degree};

  std::vector<PolynomialRep> ell;
  ell.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ell.push_back(to_monomial(lagrange.function(i)));

  double lambda = 0.0;
  for (const auto& disc : probes.discs) {
    // Monomial moments of this probe disc, shared by every l_{B_i}.
    const auto moments = basis_integrals_over_ball(mono, disc);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double integral = 0.0;
      const auto c = ell[i].coeffs();
      for (std::size_t t = 0; t < n; ++t) integral += c[t] * moments[t];
      const double r = config.balls[i].radius;
      sum += r * r * std::abs(integral);
    }
    lambda = std::max(lambda, sum / (disc.radius * disc.radius));
  }
  return lambda;
}

double lower_bound(int d, int n, double c) {
  if (d < 1) throw DomainError("lower bound needs degree >= 1");
  if (n < 1) throw DomainError("space dimension must be at least 1");
  if (n == 1) return c * std::log(static_cast<double>(d));
  return c * std::pow(static_cast<double>(d), 0.5 * (n - 1));
}

}  // namespace diskinterp

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "diskinterp/cubature.hpp"
#include "diskinterp/geometry.hpp"
#include "diskinterp/interpolation.hpp"
#include "diskinterp/polyspace.hpp"

namespace diskinterp {

// Finite family of discs D_k that stands in for "all discs inside the domain"
// in the ball norm and the Lebesgue constant.
struct ProbeSpec {
  // Centres on a resolution x resolution grid over the bounding square of the
  // domain (resolution 1 is the origin alone).
  int resolution = 41;
  std::vector<double> radii{0.05, 0.1, 0.2, 0.4};
  // Append the configuration's own balls.
  bool include_supports = true;
  double domain_radius = 1.0;
};

// Discs shrunk below this fraction of the domain radius are dropped.
inline constexpr double kMinProbeRadiusFraction = 1e-3;

struct ProbeFamily {
  std::vector<Ball> discs;
  ProbeSpec spec;
  std::size_t support_count = 0;  // trailing discs copied from a configuration

  std::size_t size() const noexcept { return discs.size(); }
};

// Grid discs are shrunk to fit the domain; duplicates and discs shrunk below
// kMinProbeRadiusFraction are dropped. Support discs are appended when
// spec.include_supports and a configuration is given. Throws ConfigError when
// the family comes out empty.
ProbeFamily gen_probe_family(const ProbeSpec& spec, const BallConfig* supports = nullptr);

ProbeFamily transform(const ProbeFamily& probes, const Similarity& phi);

// \int_{D_k} f for every probe disc.
std::vector<double> probe_integrals(const ScalarField& f, const ProbeFamily& probes,
                                    const PolarRule& rule = PolarRule::standard());

// W(k, t) = \int_{D_k} p_t by the exact path.
Eigen::MatrixXd probe_basis_matrix(const BasisSpec& basis, const ProbeFamily& probes);

// max_k |\int_{D_k} f| / |D_k|.
double ball_norm(const ScalarField& f, const ProbeFamily& probes,
                 const PolarRule& rule = PolarRule::standard());
double ball_norm(const PolynomialRep& p, const ProbeFamily& probes);
// Same maximum from precomputed probe integrals.
double ball_norm_from_integrals(std::span<const double> integrals, const ProbeFamily& probes);

// ball_norm(f - p): the f part by the rule, the p part exactly.
double error_norm(const ScalarField& f, const PolynomialRep& p, const ProbeFamily& probes,
                  const PolarRule& rule = PolarRule::standard());
double error_norm_from_integrals(std::span<const double> f_integrals, const PolynomialRep& p,
                                 const ProbeFamily& probes);

struct LebesgueReport {
  double lambda = 0.0;
  Ball argmax_disc;
  std::size_t argmax_index = 0;
  std::size_t probe_count = 0;  // M
  std::size_t basis_size = 0;   // N
  double lower_bound = 0.0;     // sqrt(d) reference (c = 1); 0 for d = 0
  int degree = 0;
};

// max over probes of the row sums of |rho W V^{-T} r|, rho = diag(rho_k^{-2}),
// r = diag(r_i^2).
LebesgueReport lebesgue_constant(const BallConfig& config, const BasisSpec& basis,
                                 const ProbeFamily& probes);
LebesgueReport lebesgue_constant(const VandermondeSystem& system, const ProbeFamily& probes);

// The same quantity summed term by term from explicit Lagrange functions:
// max_k rho_k^{-2} sum_i r_i^2 |\int_{D_k} l_{B_i}|, integrals taken on the
// monomial form of each l_{B_i}.
double lebesgue_constant_direct(const BallConfig& config, const BasisSpec& basis,
                                const ProbeFamily& probes);

// c log d for n = 1, c d^{(n-1)/2} for n > 1.
double lower_bound(int d, int n, double c = 1.0);

}  // namespace diskinterp

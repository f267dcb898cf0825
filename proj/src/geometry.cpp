#include "diskinterp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "diskinterp/errors.hpp"

namespace diskinterp {

namespace {

double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }
double norm(Point2 p) { return std::hypot(p.x, p.y); }

// Minimum pairwise distance; +inf for fewer than two points.
double min_pairwise_distance(const std::vector<Point2>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, distance(pts[i], pts[j]));
  return best;
}

std::size_t expected_ball_count(int d) { return static_cast<std::size_t>(dim_poly_space(d, 2)); }

void check_schedule(int d, const OrbitSchedule& schedule, double domain_radius) {
  const auto& radii = schedule.orbit_radii;
  if (static_cast<int>(radii.size()) != orbit_count(d)) {
    throw ConfigError("orbit schedule has " + std::to_string(radii.size()) +
                      " radii, degree " + std::to_string(d) + " needs " +
                      std::to_string(orbit_count(d)));
  }
  const double upper = schedule.rule == OrbitRule::Explicit ? domain_radius : 1.0;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    const bool degenerate = d % 2 == 0 && j + 1 == radii.size();
    if (!std::isfinite(radii[j])) throw ConfigError("orbit radius is not finite");
    if (degenerate) {
      if (radii[j] != 0.0) throw ConfigError("degenerate orbit must have radius 0");
      continue;
    }
    if (radii[j] <= 0.0 || radii[j] >= upper)
      throw ConfigError("orbit radius " + std::to_string(radii[j]) + " outside (0, " +
                        std::to_string(upper) + ")");
    if (j > 0 && radii[j] >= radii[j - 1])
      throw ConfigError("orbit radii must be strictly descending (orbits collide)");
  }
}

}  // namespace

Ball make_ball(Point2 centre, double radius) {
  if (!std::isfinite(centre.x) || !std::isfinite(centre.y))
    throw DomainError("ball centre must be finite");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw DomainError("ball radius must be positive and finite");
  return Ball{centre, radius};
}

double ball_volume(double radius, int n) {
  if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
  if (n < 1) throw DomainError("space dimension must be at least 1");
  if (n == 2) return std::numbers::pi * radius * radius;
  const double half = 0.5 * n;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0) * std::pow(radius, n);
}

void BallConfig::validate() const {
  const auto expected = expected_ball_count(degree);
  if (balls.size() != expected) {
    throw ConfigError("expected " + std::to_string(expected) + " balls for degree " +
                      std::to_string(degree) + ", got " + std::to_string(balls.size()));
  }
  for (std::size_t i = 0; i < balls.size(); ++i) {
    make_ball(balls[i].centre, balls[i].radius);
    if (allow_exceed) continue;
    // Relative slack absorbs the rounding of centre norms computed from angles.
    const double reach = norm(balls[i].centre) + balls[i].radius;
    if (reach > domain_radius * (1.0 + 1e-12)) {
      throw ConfigError("ball " + std::to_string(i) + " exceeds the domain disc (reach " +
                        std::to_string(reach) + ")");
    }
  }
}

int orbit_count(int d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  return d / 2 + 1;
}

int orbit_size(int d, int j) {
  if (j < 0 || j >= orbit_count(d)) throw DomainError("orbit index out of range");
  const int dj = d - 2 * j;
  return dj == 0 ? 1 : static_cast<int>(dim_sphere_space(dj, 2));
}

OrbitSchedule OrbitSchedule::chebyshev(int d) {
  const int count = orbit_count(d);
  const int m = d + 1;
  OrbitSchedule s;
  s.rule = OrbitRule::Chebyshev;
  for (int k = 1; k <= count; ++k) {
    // The middle node of an odd-sized set is exactly 0.
    const bool middle = 2 * k - 1 == m;
    s.orbit_radii.push_back(middle ? 0.0 : std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * m)));
  }
  return s;
}

OrbitSchedule OrbitSchedule::equidistant(int d) {
  const int count = orbit_count(d);
  OrbitSchedule s;
  s.rule = OrbitRule::Equidistant;
  for (int j = 0; j < count; ++j) s.orbit_radii.push_back(static_cast<double>(d - 2 * j) / (d + 1));
  return s;
}

OrbitSchedule OrbitSchedule::explicit_radii(std::vector<double> radii) {
  return OrbitSchedule{std::move(radii), OrbitRule::Explicit};
}

double max_disjoint_radius(const std::vector<Point2>& centres, double domain_radius) {
  double r = 0.5 * min_pairwise_distance(centres);
  for (const auto& c : centres) r = std::min(r, domain_radius - norm(c));
  r -= kDisjointMargin;
  if (!(r > 0.0) || !std::isfinite(r))
    throw ConfigError("centres admit no positive disjoint radius");
  return r;
}

BallConfig gen_orbit_config(int d, const OrbitSchedule& schedule,
                            const BallRadiusRule& radius_rule, double phase,
                            double domain_radius) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  if (!(domain_radius > 0.0)) throw DomainError("domain radius must be positive");
  check_schedule(d, schedule, domain_radius);

  const int count = orbit_count(d);
  const bool has_degenerate = d % 2 == 0;
  const int saturated = count - (has_degenerate ? 1 : 0);

  // Unit-scale centres of the saturated orbits (shape only).
  std::vector<std::vector<Point2>> shape(saturated);
  std::vector<Point2> all_shape;
  for (int j = 0; j < saturated; ++j) {
    const int size = orbit_size(d, j);
    for (int i = 0; i < size; ++i) {
      const double theta = phase + 2.0 * std::numbers::pi * i / size;
      const Point2 p{schedule.orbit_radii[j] * std::cos(theta), schedule.orbit_radii[j] * std::sin(theta)};
      shape[j].push_back(p);
      all_shape.push_back(p);
    }
  }

  const bool rule_based = schedule.rule != OrbitRule::Explicit;
  std::vector<double> per_orbit(count, 0.0);
  double scale = 1.0;

  if (std::holds_alternative<MaxDisjoint>(radius_rule)) {
    double r = domain_radius - kDisjointMargin;
    if (saturated > 0) {
      if (rule_based) {
        // Positions are (R - r) * shape, so disjointness needs
        // (R - r) * delta >= 2 r.
        const double delta = min_pairwise_distance(all_shape);
        r = domain_radius * delta / (2.0 + delta) - kDisjointMargin;
      } else {
        r = max_disjoint_radius(all_shape, domain_radius);
      }
    }
    if (!(r > 0.0)) throw ConfigError("no positive disjoint radius for this schedule");
    std::fill(per_orbit.begin(), per_orbit.begin() + saturated, r);
    scale = rule_based ? domain_radius - r : 1.0;
    if (has_degenerate) {
      double r0 = domain_radius - kDisjointMargin;
      if (saturated > 0) {
        const double innermost = scale * schedule.orbit_radii[saturated - 1];
        r0 = std::min(r0, innermost - r - kDisjointMargin);
      }
      if (!(r0 > 0.0)) throw ConfigError("no room for the degenerate-orbit ball");
      per_orbit[count - 1] = r0;
    }
  } else if (const auto* fixed = std::get_if<FixedRadius>(&radius_rule)) {
    if (!(fixed->radius > 0.0)) throw DomainError("fixed ball radius must be positive");
    std::fill(per_orbit.begin(), per_orbit.end(), fixed->radius);
    scale = rule_based ? domain_radius - fixed->radius : 1.0;
  } else {
    const auto& list = std::get<PerOrbitRadii>(radius_rule).radii;
    if (static_cast<int>(list.size()) != count)
      throw ConfigError("per-orbit radius list needs " + std::to_string(count) + " entries");
    for (double r : list)
      if (!(r > 0.0)) throw DomainError("per-orbit radii must be positive");
    per_orbit = list;
    scale = rule_based ? domain_radius - *std::max_element(list.begin(), list.end()) : 1.0;
  }
  if (!(scale > 0.0)) throw ConfigError("ball radius leaves no room for the orbits");

  BallConfig config;
  config.degree = d;
  config.domain_radius = domain_radius;
  switch (schedule.rule) {
    case OrbitRule::Chebyshev:
      config.label = "chebyshev-orbits";
      break;
    case OrbitRule::Equidistant:
      config.label = "equidistant-orbits";
      break;
    case OrbitRule::Explicit:
      config.label = "explicit-orbits";
      break;
  }
  config.balls.reserve(expected_ball_count(d));
  for (int j = 0; j < saturated; ++j) {
    for (const auto& p : shape[j]) {
      config.balls.push_back(make_ball({scale * p.x, scale * p.y}, per_orbit[j]));
    }
  }
  if (has_degenerate) config.balls.push_back(make_ball({0.0, 0.0}, per_orbit[count - 1]));
  config.validate();
  return config;
}

double radical_inverse(std::uint64_t index, unsigned base) {
  if (base < 2) throw DomainError("radical inverse base must be at least 2");
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  while (index > 0) {
    numerator = numerator * base + index % base;
    denominator *= base;
    index /= base;
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

Point2 halton_point(std::uint64_t index) {
  if (index == 0) throw DomainError("Halton indices start at 1");
  return {radical_inverse(index, 2), radical_inverse(index, 3)};
}

BallConfig gen_halton_config(int d, double margin, const BallRadiusRule& radius_rule,
                             double domain_radius) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  if (!(margin > 0.0 && margin < 1.0)) throw DomainError("margin must lie in (0, 1)");
  const auto n = expected_ball_count(d);
  const double limit = (1.0 - margin) * domain_radius;

  std::vector<Point2> centres;
  centres.reserve(n);
  for (std::uint64_t index = 1; centres.size() < n; ++index) {
    const Point2 u = halton_point(index);
    const Point2 p{domain_radius * (2.0 * u.x - 1.0), domain_radius * (2.0 * u.y - 1.0)};
    if (norm(p) <= limit) centres.push_back(p);
  }

  double r = 0.0;
  if (std::holds_alternative<MaxDisjoint>(radius_rule)) {
    r = max_disjoint_radius(centres, domain_radius);
  } else if (const auto* fixed = std::get_if<FixedRadius>(&radius_rule)) {
    r = fixed->radius;
  } else {
    throw ConfigError("per-orbit radii do not apply to Halton centres");
  }

  BallConfig config;
  config.degree = d;
  config.label = "halton";
  config.domain_radius = domain_radius;
  for (const auto& c : centres) config.balls.push_back(make_ball(c, r));
  config.validate();
  return config;
}

BallConfig counterexample_concentric(int d) {
  if (d < 1) throw DomainError("counterexamples need degree >= 1");
  const auto n = expected_ball_count(d);
  BallConfig config;
  config.degree = d;
  config.label = "concentric";
  config.expect_singular = true;
  for (std::size_t j = 1; j <= n; ++j)
    config.balls.push_back(make_ball({0.0, 0.0}, static_cast<double>(j) / static_cast<double>(n + 1)));
  config.validate();
  return config;
}

BallConfig counterexample_collinear(int d) {
  if (d < 1) throw DomainError("counterexamples need degree >= 1");
  const auto n = expected_ball_count(d);
  BallConfig config;
  config.degree = d;
  config.label = "collinear";
  config.expect_singular = true;
  for (std::size_t j = 0; j < n; ++j) {
    const double xi = -0.5 + static_cast<double>(j) / static_cast<double>(n - 1);
    config.balls.push_back(make_ball({xi, 0.0}, 0.1));
  }
  config.validate();
  return config;
}

BallConfig randomize_radii(const BallConfig& config, std::uint64_t seed, OverlapPolicy policy) {
  std::mt19937_64 rng(seed);
  BallConfig out = config;
  const double neighbour_factor = policy == OverlapPolicy::Disjoint ? 0.5 : 1.0;
  for (std::size_t i = 0; i < out.balls.size(); ++i) {
    const Point2 c = out.balls[i].centre;
    double r_max = config.domain_radius - norm(c);
    if (policy != OverlapPolicy::BoundaryOnly) {
      for (std::size_t j = 0; j < out.balls.size(); ++j)
        if (j != i) r_max = std::min(r_max, neighbour_factor * distance(c, out.balls[j].centre));
    }
    if (!(r_max > 0.0)) throw ConfigError("ball " + std::to_string(i) + " has no room for a radius");
    // u in [0, 1) with 53 random bits, so the radius lands in (0, r_max].
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out.balls[i].radius = r_max * (1.0 - u);
  }
  out.label = config.label + (policy == OverlapPolicy::Disjoint ? "+random-radii" : "+random-radii-overlap");
  out.validate();
  return out;
}

BallConfig randomize_radii(const BallConfig& config, std::uint64_t seed, bool overlap_allowed) {
  return randomize_radii(config, seed,
                         overlap_allowed ? OverlapPolicy::NeighbourBound : OverlapPolicy::Disjoint);
}

Point2 Similarity::apply(Point2 p) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {scale * (c * p.x - s * p.y + translation.x), scale * (s * p.x + c * p.y + translation.y)};
}

Ball Similarity::apply(const Ball& b) const {
  return make_ball(apply(b.centre), std::abs(scale) * b.radius);
}

BallConfig transform(const BallConfig& config, const Similarity& phi) {
  BallConfig out = config;
  for (auto& b : out.balls) b = phi.apply(b);
  out.domain_radius = std::abs(phi.scale) * config.domain_radius;
  out.allow_exceed = true;
  return out;
}

}  // namespace diskinterp

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diskinterp/polyspace.hpp"

namespace diskinterp {

// Closed disc B(centre, radius).
struct Ball {
  Point2 centre;
  double radius = 0.0;

  friend bool operator==(const Ball& l, const Ball& r) {
    return l.centre.x == r.centre.x && l.centre.y == r.centre.y && l.radius == r.radius;
  }
};

// Throws DomainError unless the centre is finite and the radius positive.
Ball make_ball(Point2 centre, double radius);

// Volume of the n-ball of the given radius, pi^{n/2} / Gamma(n/2 + 1) R^n.
double ball_volume(double radius, int n = 2);

// Ordered collection of N = dim P_d(R^2) discs inside the domain disc
// B(0, domain_radius).
struct BallConfig {
  std::vector<Ball> balls;
  int degree = 0;
  std::string label;
  double domain_radius = 1.0;
  // Skip the containment check (transformed or hand-made configurations).
  bool allow_exceed = false;
  // Set by the counterexample factories.
  bool expect_singular = false;

  // Throws ConfigError on a ball-count mismatch or a ball leaving the domain.
  void validate() const;
};

// Number of orbits Algorithm-style construction uses for degree d, counting
// the degenerate orbit at the origin for even d: floor(d/2) + 1.
int orbit_count(int d);

// Number of centres on the j-th orbit (j = 0 is the outermost): 2(d - 2j) + 1,
// or 1 for the degenerate orbit.
int orbit_size(int d, int j);

enum class OrbitRule { Chebyshev, Equidistant, Explicit };

// One radius per orbit, outermost first; the last entry is 0 for even degree
// (degenerate orbit). For the Chebyshev and Equidistant rules the radii are
// shape values in [0, 1) that gen_orbit_config scales by
// (domain_radius - ball radius); Explicit radii are used as given.
struct OrbitSchedule {
  std::vector<double> orbit_radii;
  OrbitRule rule = OrbitRule::Explicit;

  // Nonnegative Chebyshev-Gauss points cos((2k - 1) pi / (2(d + 1))).
  static OrbitSchedule chebyshev(int d);
  // j / N with N = d + 1 and j the orbit degree d, d - 2, ... : the
  // nonnegative midpoints of d + 1 equal cells of [-1, 1]. Ends at 0 (the
  // degenerate orbit) for even d.
  static OrbitSchedule equidistant(int d);
  static OrbitSchedule explicit_radii(std::vector<double> radii);
};

struct MaxDisjoint {};
struct FixedRadius {
  double radius;
};
struct PerOrbitRadii {
  std::vector<double> radii;
};
using BallRadiusRule = std::variant<MaxDisjoint, FixedRadius, PerOrbitRadii>;

// Safety margin subtracted from radii chosen by MaxDisjoint.
inline constexpr double kDisjointMargin = 1e-9;

BallConfig gen_orbit_config(int d, const OrbitSchedule& schedule,
                            const BallRadiusRule& radius_rule = MaxDisjoint{},
                            double phase = 0.0, double domain_radius = 1.0);

// Radical inverse of index in the given base, computed as one exactly rounded
// division.
double radical_inverse(std::uint64_t index, unsigned base);

// Halton point number index (index >= 1) in [0, 1]^2, bases 2 and 3.
Point2 halton_point(std::uint64_t index);

BallConfig gen_halton_config(int d, double margin,
                             const BallRadiusRule& radius_rule = MaxDisjoint{},
                             double domain_radius = 1.0);

// N origin-centred discs with radii j / (N + 1).
BallConfig counterexample_concentric(int d);

// N discs of radius 0.1 centred on the x-axis, evenly spread over [-1/2, 1/2].
BallConfig counterexample_collinear(int d);

// Upper bound r_max_i for a redrawn radius; every bound is also capped by the
// distance to the domain boundary.
enum class OverlapPolicy {
  Disjoint,        // half the nearest-centre distance
  NeighbourBound,  // the nearest-centre distance: discs overlap, no disc covers another centre
  BoundaryOnly,    // no neighbour cap at all
};

// Redraws every radius uniformly from (0, r_max_i]. Deterministic in seed.
BallConfig randomize_radii(const BallConfig& config, std::uint64_t seed, OverlapPolicy policy);
// overlap_allowed selects NeighbourBound, otherwise Disjoint.
BallConfig randomize_radii(const BallConfig& config, std::uint64_t seed, bool overlap_allowed);

// Largest common radius keeping the given centres pairwise disjoint and inside
// the domain, minus kDisjointMargin.
double max_disjoint_radius(const std::vector<Point2>& centres, double domain_radius);

// x -> scale * (R(angle) x + translation).
struct Similarity {
  double scale = 1.0;
  double angle = 0.0;
  Point2 translation;

  Point2 apply(Point2 p) const;
  Ball apply(const Ball& b) const;
};

// Maps every ball; the result has allow_exceed set since the domain disc is
// not carried along.
BallConfig transform(const BallConfig& config, const Similarity& phi);

// Config files: `<path>` is a CSV with header `x,y,r`; `<path>.json` is the
// sidecar holding degree, label, domain_radius and flags. Without a sidecar
// the degree is inferred from the ball count, or taken from degree_override.
void save_config(const BallConfig& config, const std::filesystem::path& path);
BallConfig load_config(const std::filesystem::path& path,
                       std::optional<int> degree_override = std::nullopt);
std::filesystem::path sidecar_path(const std::filesystem::path& path);

}  // namespace diskinterp

#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"

#include "diskinterp/errors.hpp"
#include "diskinterp/geometry.hpp"

using namespace diskinterp;

namespace {

double dist(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

// Digit-by-digit radical inverse in long double.
long double radical_inverse_oracle(std::uint64_t i, unsigned base) {
  long double f = 1.0L, r = 0.0L;
  while (i > 0) {
    f /= base;
    r += f * static_cast<long double>(i % base);
    i /= base;
  }
  return r;
}

void check_disjoint(const BallConfig& c) {
  for (std::size_t i = 0; i < c.balls.size(); ++i)
    for (std::size_t j = i + 1; j < c.balls.size(); ++j)
      CHECK(dist(c.balls[i].centre, c.balls[j].centre) > c.balls[i].radius + c.balls[j].radius);
}

}  // namespace

TEST_CASE("ball volume") {
  CHECK(ball_volume(0.5) == doctest::Approx(std::numbers::pi * 0.25));
  // pi^{3/2} / Gamma(5/2) with Gamma(5/2) = 3 sqrt(pi) / 4.
  CHECK(ball_volume(2.0, 3) == doctest::Approx(4.0 / 3.0 * std::numbers::pi * 8.0).epsilon(1e-14));
  CHECK(ball_volume(1.0, 1) == doctest::Approx(2.0));
  CHECK_THROWS_AS(ball_volume(-1.0), DomainError);
  CHECK_THROWS_AS(make_ball({0, 0}, 0.0), DomainError);
  CHECK_THROWS_AS(make_ball({NAN, 0}, 0.1), DomainError);
}

TEST_CASE("Halton sequence against a digit-expansion oracle") {
  for (std::uint64_t i = 1; i <= 1000; ++i) {
    const Point2 p = halton_point(i);
    CHECK(p.x == static_cast<double>(radical_inverse_oracle(i, 2)));
    CHECK(p.y == static_cast<double>(radical_inverse_oracle(i, 3)));
  }
  CHECK(halton_point(1).x == 0.5);
  CHECK(halton_point(1).y == 1.0 / 3.0);
  CHECK(halton_point(2).x == 0.25);
  CHECK(halton_point(3).y == 1.0 / 9.0);
  CHECK_THROWS_AS(halton_point(0), DomainError);
}

TEST_CASE("Halton configuration") {
  for (int d = 0; d <= 10; ++d) {
    const auto c = gen_halton_config(d, 0.05);
    CHECK(c.balls.size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    CHECK(c.label == "halton");
    for (const auto& b : c.balls) CHECK(std::hypot(b.centre.x, b.centre.y) <= 0.95);
    check_disjoint(c);
  }
}

TEST_CASE("orbit counts") {
  int sizes_even = 0;
  for (int j = 0; j < orbit_count(6); ++j) sizes_even += orbit_size(6, j);
  CHECK(orbit_count(6) == 4);
  CHECK(sizes_even == 13 + 9 + 5 + 1);
  CHECK(orbit_count(5) == 3);
  CHECK(orbit_size(5, 2) == 3);
  for (int d = 0; d <= 20; ++d) {
    int total = 0;
    for (int j = 0; j < orbit_count(d); ++j) total += orbit_size(d, j);
    CHECK(total == (d + 1) * (d + 2) / 2);
  }
}

TEST_CASE("orbit schedules") {
  const auto cheb = OrbitSchedule::chebyshev(5);
  REQUIRE(cheb.orbit_radii.size() == 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(cheb.orbit_radii[k - 1] == doctest::Approx(std::cos((2 * k - 1) * std::numbers::pi / 12.0)));
  const auto cheb_even = OrbitSchedule::chebyshev(4);
  CHECK(cheb_even.orbit_radii.back() == 0.0);

  const auto eq = OrbitSchedule::equidistant(4);
  REQUIRE(eq.orbit_radii.size() == 3);
  CHECK(eq.orbit_radii[0] == doctest::Approx(0.8));
  CHECK(eq.orbit_radii[1] == doctest::Approx(0.4));
  CHECK(eq.orbit_radii[2] == 0.0);
}

TEST_CASE("orbit configurations") {
  for (int d = 0; d <= 15; ++d) {
    for (const auto& schedule : {OrbitSchedule::chebyshev(d), OrbitSchedule::equidistant(d)}) {
      const auto c = gen_orbit_config(d, schedule, MaxDisjoint{}, 0.3);
      CHECK(c.balls.size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
      check_disjoint(c);
      for (const auto& b : c.balls) CHECK(std::hypot(b.centre.x, b.centre.y) + b.radius <= 1.0);
      // Centres of one orbit share a radius and are equally spaced in angle.
      const int n0 = orbit_size(d, 0);
      const double rho = std::hypot(c.balls[0].centre.x, c.balls[0].centre.y);
      for (int i = 0; i < n0 && d > 0; ++i) {
        CHECK(std::hypot(c.balls[i].centre.x, c.balls[i].centre.y) == doctest::Approx(rho));
        const double theta = std::atan2(c.balls[i].centre.y, c.balls[i].centre.x);
        const double expected = 0.3 + 2.0 * std::numbers::pi * i / n0;
        CHECK(std::remainder(theta - expected, 2.0 * std::numbers::pi) == doctest::Approx(0.0).scale(1.0));
      }
      std::set<double> radii;
      for (const auto& b : c.balls) radii.insert(std::round(std::hypot(b.centre.x, b.centre.y) * 1e9));
      CHECK(radii.size() == static_cast<std::size_t>(orbit_count(d)));
      if (d % 2 == 0) {
        CHECK(c.balls.back().centre.x == 0.0);
        CHECK(c.balls.back().centre.y == 0.0);
      }
    }
  }
}

TEST_CASE("orbit configuration radius rules") {
  const auto fixed = gen_orbit_config(3, OrbitSchedule::chebyshev(3), FixedRadius{0.05});
  for (const auto& b : fixed.balls) CHECK(b.radius == 0.05);
  const auto per = gen_orbit_config(4, OrbitSchedule::chebyshev(4), PerOrbitRadii{{0.05, 0.04, 0.03}});
  CHECK(per.balls.front().radius == 0.05);
  CHECK(per.balls.back().radius == 0.03);
  CHECK_THROWS_AS(gen_orbit_config(4, OrbitSchedule::chebyshev(4), PerOrbitRadii{{0.05}}), ConfigError);
  CHECK_THROWS_AS(gen_orbit_config(4, OrbitSchedule::explicit_radii({0.9, 0.5})), ConfigError);
  const auto expl = gen_orbit_config(2, OrbitSchedule::explicit_radii({0.7, 0.0}));
  CHECK(std::hypot(expl.balls[0].centre.x, expl.balls[0].centre.y) == doctest::Approx(0.7));
  CHECK(expl.label == "explicit-orbits");
}

TEST_CASE("counterexample families") {
  for (int d = 1; d <= 6; ++d) {
    const std::size_t n = (d + 1) * (d + 2) / 2;
    const auto conc = counterexample_concentric(d);
    CHECK(conc.expect_singular);
    REQUIRE(conc.balls.size() == n);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(conc.balls[j].centre.x == 0.0);
      CHECK(conc.balls[j].radius == doctest::Approx(double(j + 1) / double(n + 1)));
    }
    const auto col = counterexample_collinear(d);
    CHECK(col.expect_singular);
    CHECK(col.balls.front().centre.x == doctest::Approx(-0.5));
    CHECK(col.balls.back().centre.x == doctest::Approx(0.5));
    for (const auto& b : col.balls) {
      CHECK(b.centre.y == 0.0);
      CHECK(b.radius == 0.1);
    }
  }
  CHECK_THROWS_AS(counterexample_concentric(0), DomainError);
}

TEST_CASE("random radii") {
  const auto base = gen_orbit_config(6, OrbitSchedule::chebyshev(6));
  const auto a = randomize_radii(base, 42, false);
  const auto b = randomize_radii(base, 42, false);
  const auto c = randomize_radii(base, 43, false);
  CHECK(a.balls == b.balls);
  CHECK_FALSE(a.balls == c.balls);
  CHECK(a.label == "chebyshev-orbits+random-radii");
  check_disjoint(a);
  for (std::size_t i = 0; i < a.balls.size(); ++i) CHECK(a.balls[i].centre.x == base.balls[i].centre.x);

  const auto o = randomize_radii(base, 42, true);
  CHECK(o.label == "chebyshev-orbits+random-radii-overlap");
  for (std::size_t i = 0; i < o.balls.size(); ++i) {
    CHECK(o.balls[i].radius > 0.0);
    CHECK(std::hypot(o.balls[i].centre.x, o.balls[i].centre.y) + o.balls[i].radius <= 1.0 + 1e-12);
    for (std::size_t j = 0; j < o.balls.size(); ++j)
      if (i != j) CHECK(dist(o.balls[i].centre, o.balls[j].centre) >= o.balls[i].radius);
  }
  bool any_overlap = false;
  for (int seed = 0; seed < 10 && !any_overlap; ++seed) {
    const auto t = randomize_radii(base, seed, true);
    for (std::size_t i = 0; i < t.balls.size(); ++i)
      for (std::size_t j = i + 1; j < t.balls.size(); ++j)
        any_overlap |= dist(t.balls[i].centre, t.balls[j].centre) < t.balls[i].radius + t.balls[j].radius;
  }
  CHECK(any_overlap);

  const auto wide = randomize_radii(base, 42, OverlapPolicy::BoundaryOnly);
  for (const auto& ball : wide.balls)
    CHECK(std::hypot(ball.centre.x, ball.centre.y) + ball.radius <= 1.0 + 1e-12);
}

TEST_CASE("configuration validation") {
  auto c = gen_orbit_config(2, OrbitSchedule::chebyshev(2));
  c.balls.pop_back();
  CHECK_THROWS_AS(c.validate(), ConfigError);
  auto out = gen_orbit_config(1, OrbitSchedule::chebyshev(1));
  out.balls[0].radius = 0.9;
  CHECK_THROWS_AS(out.validate(), ConfigError);
  out.allow_exceed = true;
  CHECK_NOTHROW(out.validate());
}

TEST_CASE("similarity maps") {
  const Similarity phi{2.0, std::numbers::pi / 2, {1.0, 0.0}};
  const Point2 p = phi.apply(Point2{1.0, 0.0});
  CHECK(p.x == doctest::Approx(2.0));
  CHECK(p.y == doctest::Approx(2.0));
  const Ball b = phi.apply(Ball{{0.0, 0.0}, 0.25});
  CHECK(b.radius == 0.5);
  const auto c = transform(gen_orbit_config(3, OrbitSchedule::chebyshev(3)), phi);
  CHECK(c.allow_exceed);
  CHECK(c.domain_radius == 2.0);
}

TEST_CASE("max disjoint radius") {
  const std::vector<Point2> pts{{-0.5, 0.0}, {0.5, 0.0}};
  CHECK(max_disjoint_radius(pts, 1.0) == doctest::Approx(0.5 - kDisjointMargin));
  const std::vector<Point2> near_edge{{0.0, 0.0}, {0.9, 0.0}};
  CHECK(max_disjoint_radius(near_edge, 1.0) == doctest::Approx(0.1 - kDisjointMargin));
}

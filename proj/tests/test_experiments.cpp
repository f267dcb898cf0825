#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "diskinterp/errors.hpp"
#include "diskinterp/experiments.hpp"

using namespace diskinterp;
namespace fs = std::filesystem;

namespace {

ExperimentSpec quick(ExperimentName name, std::vector<int> degrees) {
  ExperimentSpec spec;
  spec.name = name;
  spec.degrees = std::move(degrees);
  spec.probes.resolution = 9;
  spec.trials = 3;
  return spec;
}

std::string csv_text(const ExperimentResult& r) {
  std::ostringstream out;
  write_csv(r, out);
  return out.str();
}

// Three coincident discs: singular for degree 1.
fs::path singular_file() {
  const auto dir = fs::temp_directory_path() / "diskinterp_experiments_test";
  fs::create_directories(dir);
  const auto path = dir / "stack_1.csv";
  std::ofstream(path) << "x,y,r\n0.1,0,0.2\n0.1,0,0.2\n0.1,0,0.2\n";
  return path;
}

}  // namespace

TEST_CASE("builtin functions") {
  CHECK(f1({0.0, 0.0}) == 0.0);
  CHECK(f1({1.0, 0.5}) == doctest::Approx(std::exp(1.0) * std::sin(1.5)));
  CHECK(f2({0.0, 0.0}) == 1.0);
  CHECK(f2({0.2, 0.0}) == doctest::Approx(0.5));
  CHECK(builtin_function("f2")({0.6, 0.8}) == doctest::Approx(1.0 / 26.0));
  CHECK_THROWS_AS(builtin_function("f3"), ConfigError);
}

TEST_CASE("experiment spec validation") {
  CHECK(parse_experiment_name("interp_error") == ExperimentName::InterpError);
  CHECK(parse_experiment_name("lebesgue-sweep") == ExperimentName::LebesgueSweep);
  CHECK_THROWS_AS(parse_experiment_name("plots"), ConfigError);
  auto spec = quick(ExperimentName::Conditioning, {});
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.degrees = {3, 2};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.degrees = {2, 2};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.degrees = {1, 2};
  CHECK_NOTHROW(spec.validate());
  CHECK(spec.resolved_families() == std::vector<std::string>{"halton", "chebyshev-orbits"});
}

TEST_CASE("family names") {
  CHECK(family_config("halton", 3).label == "halton");
  CHECK(family_config("equidistant-orbits", 4).balls.size() == 15);
  CHECK(family_config("collinear", 2).expect_singular);
  CHECK_THROWS_AS(family_config("optimal", 2), ConfigError);
  const auto path = singular_file();
  auto pattern = path.string();
  pattern.replace(pattern.find("_1.csv"), 6, "_{d}.csv");
  CHECK(family_config("file:" + pattern, 1).balls.size() == 3);
  CHECK_THROWS_AS(family_config("file:" + pattern, 2), IoError);
}

TEST_CASE("shortest round-trip formatting") {
  for (double v : {0.1, 1.0 / 3.0, 2.5e-300, -7.0, 123456789.125}) {
    const std::string s = format_double(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
  CHECK(format_double(NAN) == "nan");
  CHECK(format_double(INFINITY) == "inf");
}

TEST_CASE("trial seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (int d = 1; d <= 8; ++d)
    for (int t = 0; t <= 20; ++t)
      for (bool o : {false, true}) seen.insert(trial_seed(1, d, t, o));
  CHECK(seen.size() == 8 * 21 * 2);
  CHECK(trial_seed(1, 3, 4, true) == trial_seed(1, 3, 4, true));
  CHECK(trial_seed(1, 3, 4, true) != trial_seed(2, 3, 4, true));
}

TEST_CASE("conditioning rows") {
  const auto r = run_conditioning(quick(ExperimentName::Conditioning, {1, 2}));
  CHECK(r.header.front() == "d");
  REQUIRE(r.rows.size() == 2 * 2 * 2);
  for (const auto& row : r.rows) CHECK(std::stod(row[3]) >= 1.0);
  CHECK(r.rows[0][1] == "halton");
  CHECK(r.rows[0][2] == "monomial");
  CHECK(r.rows[1][2] == "chebyshev");
  CHECK(r.exit_code == 0);
}

TEST_CASE("output order does not depend on the worker count") {
  auto spec = quick(ExperimentName::RandomRadii, {1, 2, 3});
  spec.seed = 17;
  spec.jobs = 1;
  const auto serial = csv_text(run_random_radii(spec));
  spec.jobs = 4;
  CHECK(csv_text(run_random_radii(spec)) == serial);
  spec.seed = 18;
  CHECK(csv_text(run_random_radii(spec)) != serial);
}

TEST_CASE("random radii rows") {
  const auto r = run_random_radii(quick(ExperimentName::RandomRadii, {2}));
  REQUIRE(r.rows.size() == 1 + 2 * 3);
  CHECK(r.rows[0][3] == "fixed");
  CHECK(r.rows[1][3] == "disjoint");
  CHECK(r.rows[2][3] == "overlap");
  for (const auto& row : r.rows) CHECK(row[4] == "unisolvent");
}

TEST_CASE("interpolation error and Lebesgue rows") {
  auto spec = quick(ExperimentName::InterpError, {1, 3});
  spec.function = "f2";
  const auto e = run_interp_error(spec);
  CHECK(e.rows.size() == 3 * 2);
  CHECK(e.warnings.size() == 1);
  for (const auto& row : e.rows) CHECK(std::stod(row[4]) > 0.0);

  spec.name = ExperimentName::LebesgueSweep;
  const auto l = run_lebesgue_sweep(spec);
  for (const auto& row : l.rows) CHECK(std::stod(row[3]) >= 1.0);

  spec.families = {"file:" + singular_file().string()};
  spec.degrees = {1};
  const auto bad = run_interp_error(spec);
  CHECK(bad.warnings.empty());
  CHECK(bad.exit_code == 2);
  CHECK(bad.rows[0][5] == "singular");
  CHECK(bad.rows[0][4] == "nan");
}

TEST_CASE("counterexample verdicts drive the exit code") {
  const auto ok = run_counterexamples(quick(ExperimentName::Counterexamples, {1, 2, 3, 4, 5, 6}));
  CHECK(ok.exit_code == 0);
  for (const auto& row : ok.rows) CHECK(row[4] == row[5]);

  auto spec = quick(ExperimentName::Counterexamples, {1});
  spec.families = {"file:" + singular_file().string()};
  CHECK(run_counterexamples(spec).exit_code == 2);
}

TEST_CASE("metadata sidecar") {
  auto spec = quick(ExperimentName::LebesgueSweep, {2});
  spec.seed = 99;
  const auto meta = nlohmann::json::parse(experiment_metadata(spec));
  CHECK(meta["seed"] == 99);
  CHECK(meta["probe_family"]["resolution"] == 9);
  CHECK(meta["version"] == std::string(tool_version()));
  CHECK(meta["families"].size() == 3);
  CHECK(experiment_metadata(spec) == experiment_metadata(spec));

  const auto dir = fs::temp_directory_path() / "diskinterp_experiments_test";
  fs::create_directories(dir);
  const auto out = dir / "sweep.csv";
  save_experiment(spec, run_lebesgue_sweep(spec), out);
  CHECK(fs::exists(out));
  CHECK(fs::exists(sidecar_path(out)));
  CHECK_THROWS_AS(save_experiment(spec, ExperimentResult{}, dir / "missing" / "x.csv"), IoError);
}

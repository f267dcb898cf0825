#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#include "diskinterp/errors.hpp"
#include "diskinterp/geometry.hpp"

using namespace diskinterp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path = fs::temp_directory_path() / "diskinterp_config_io_test";
  TempDir() {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string parse_message(const fs::path& p, std::optional<int> degree = std::nullopt) {
  try {
    load_config(p, degree);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("round trip is bit exact") {
  TempDir tmp;
  for (const auto& original : {gen_orbit_config(7, OrbitSchedule::chebyshev(7), MaxDisjoint{}, 0.123),
                               gen_halton_config(5, 0.05), counterexample_collinear(3)}) {
    const auto file = tmp.path / "config.csv";
    save_config(original, file);
    CHECK(fs::exists(sidecar_path(file)));
    const auto loaded = load_config(file);
    CHECK(loaded.balls == original.balls);
    CHECK(loaded.degree == original.degree);
    CHECK(loaded.label == original.label);
    CHECK(loaded.expect_singular == original.expect_singular);
  }
}

TEST_CASE("degree inferred without a sidecar") {
  TempDir tmp;
  const auto file = tmp.path / "plain.csv";
  write_file(file, "# three discs\nx,y,r\n0.5,0,0.1\n-0.25,0.4,0.1\n\n-0.25,-0.4,0.1\n");
  const auto c = load_config(file);
  CHECK(c.degree == 1);
  CHECK(c.label == "file:" + file.string());
  CHECK(c.balls[1].centre.y == 0.4);
}

TEST_CASE("ball count mismatch names the expected count") {
  TempDir tmp;
  const auto file = tmp.path / "five.csv";
  write_file(file, "x,y,r\n0,0,0.1\n0.5,0,0.1\n-0.5,0,0.1\n0,0.5,0.1\n0,-0.5,0.1\n");
  CHECK(parse_message(file, 2).find("expected 6 balls") != std::string::npos);
  CHECK(parse_message(file).find("5 balls") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  TempDir tmp;
  const auto file = tmp.path / "bad.csv";
  write_file(file, "x,y,r\n0,0,0.1\n0.5,abc,0.1\n");
  CHECK(parse_message(file).rfind("line 3:", 0) == 0);
  write_file(file, "a,b,c\n");
  CHECK(parse_message(file).rfind("line 1:", 0) == 0);
  write_file(file, "x,y,r\n0,0\n");
  CHECK(parse_message(file).rfind("line 2:", 0) == 0);
  write_file(file, "x,y,r\n0,0,-0.1\n");
  CHECK(parse_message(file).rfind("line 2:", 0) == 0);
  write_file(file, "x,y,r\n0,0,2\n");
  CHECK_THROWS_AS(load_config(file), ParseError);
  CHECK_THROWS_AS(load_config(tmp.path / "missing.csv"), IoError);
}

TEST_CASE("broken sidecar") {
  TempDir tmp;
  const auto file = tmp.path / "side.csv";
  write_file(file, "x,y,r\n0,0,0.5\n");
  write_file(sidecar_path(file), "{ \"degree\": ");
  CHECK_THROWS_AS(load_config(file), ParseError);
}

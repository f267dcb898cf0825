#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "diskinterp/cubature.hpp"
#include "diskinterp/geometry.hpp"
#include "diskinterp/lebesgue.hpp"
#include "diskinterp/polyspace.hpp"

namespace diskinterp {

// f1(x, y) = e^x sin(x + y).
double f1(Point2 p);
// f2(x, y) = 1 / (25 (x^2 + y^2) + 1).
double f2(Point2 p);
// "f1" or "f2"; throws ConfigError otherwise.
ScalarField builtin_function(std::string_view name);

// Fraction of the domain radius kept clear of Halton centres.
inline constexpr double kHaltonMargin = 0.05;

// Configuration of degree d for a family name: "chebyshev-orbits",
// "equidistant-orbits", "halton", the counterexamples "concentric" and
// "collinear", or "file:<path>" where every "{d}" in the path is replaced by
// the degree.
BallConfig family_config(std::string_view family, int d, double phase = 0.0);

enum class ExperimentName { Conditioning, InterpError, LebesgueSweep, RandomRadii, Counterexamples };
std::string_view to_string(ExperimentName name);
// Accepts both the dashed and the underscored spelling.
ExperimentName parse_experiment_name(std::string_view text);

struct ExperimentSpec {
  ExperimentName name = ExperimentName::Conditioning;
  std::vector<int> degrees;
  // Empty selects the experiment's default families.
  std::vector<std::string> families;
  // Used by every experiment except conditioning, which runs both bases.
  BasisKind basis = BasisKind::ProductChebyshev;
  std::uint64_t seed = 1;
  std::string function = "f1";
  int trials = 20;
  double phase = 0.0;
  ProbeSpec probes;
  // 0 picks the hardware concurrency.
  unsigned jobs = 0;

  // Throws ConfigError: degrees empty, not strictly ascending, or negative.
  void validate() const;
  std::vector<std::string> resolved_families() const;
};

// One CSV table plus what the CLI needs to report.
struct ExperimentResult {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> warnings;
  // 0, or 2 when a configuration expected to be unisolvent was not (or the
  // reverse for counterexamples).
  int exit_code = 0;
};

ExperimentResult run_conditioning(const ExperimentSpec& spec);
ExperimentResult run_interp_error(const ExperimentSpec& spec);
ExperimentResult run_lebesgue_sweep(const ExperimentSpec& spec);
ExperimentResult run_random_radii(const ExperimentSpec& spec);
ExperimentResult run_counterexamples(const ExperimentSpec& spec);
ExperimentResult run_experiment(const ExperimentSpec& spec);

// Seed of one random-radius draw, mixed from the base seed and its coordinates.
std::uint64_t trial_seed(std::uint64_t base, int d, int trial, bool overlap);

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

void write_csv(const ExperimentResult& result, std::ostream& out);
// Writes <path> and the metadata sidecar <path>.json; throws IoError.
void save_experiment(const ExperimentSpec& spec, const ExperimentResult& result,
                     const std::filesystem::path& path);
// Sidecar contents: the spec, the probe family, the quadrature and the tool
// version. Holds no timestamps.
std::string experiment_metadata(const ExperimentSpec& spec);

std::string_view tool_version();

}  // namespace diskinterp

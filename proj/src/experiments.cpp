#include "diskinterp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "diskinterp/errors.hpp"
#include "diskinterp/interpolation.hpp"

namespace diskinterp {

namespace {

using Row = std::vector<std::string>;

// Runs fn over every job on a small pool; results keep job order, so the
// output never depends on scheduling. The first exception in job order is
// rethrown.
template <class Job, class Fn>
auto parallel_map(const std::vector<Job>& jobs, unsigned workers, Fn fn) {
  using Result = decltype(fn(jobs.front()));
  std::vector<Result> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = fn(jobs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::string replace_all(std::string text, std::string_view from, std::string_view to) {
  for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size()))
    text.replace(pos, from.size(), to);
  return text;
}

bool has_file_family(const std::vector<std::string>& families) {
  return std::any_of(families.begin(), families.end(),
                     [](const std::string& f) { return f.starts_with("file:"); });
}

constexpr const char* kOptimalSkipped =
    "no file:<path> family given; the optimal-discs family is skipped";

// Grid probes shared by every configuration, plus that configuration's balls.
ProbeFamily with_supports(const ProbeFamily& grid, const BallConfig& config) {
  ProbeFamily out = grid;
  out.spec.include_supports = true;
  out.discs.insert(out.discs.end(), config.balls.begin(), config.balls.end());
  out.support_count = config.balls.size();
  return out;
}

ProbeFamily grid_probes(const ExperimentSpec& spec) {
  ProbeSpec ps = spec.probes;
  ps.include_supports = false;
  return gen_probe_family(ps);
}

struct ErrorRow {
  Verdict verdict = Verdict::Singular;
  double sigma_ratio = 0.0;
  double error = std::nan("");
};

// error_norm(f - Pi f) over grid + supports, reusing the grid integrals of f.
ErrorRow interpolation_error(const BallConfig& config, const BasisSpec& basis,
                             const ScalarField& f, const ProbeFamily& grid,
                             const std::vector<double>& grid_integrals) {
  const PolarRule rule = PolarRule::standard();
  std::optional<Interpolator> interp;
  try {
    interp.emplace(config, basis, rule);
  } catch (const UnisolvenceError& e) {
    return {Verdict::Singular, e.sigma_ratio()};
  }
  ErrorRow row{Verdict::Unisolvent, interp->system().sigma_ratio()};

  std::vector<double> data(config.balls.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = func_integral_over_ball(f, config.balls[i], rule);
  const PolynomialRep p = interp->from_data(data);

  std::vector<double> integrals = grid_integrals;
  integrals.insert(integrals.end(), data.begin(), data.end());
  row.error = error_norm_from_integrals(integrals, p, with_supports(grid, config));
  return row;
}

}  // namespace

double f1(Point2 p) { return std::exp(p.x) * std::sin(p.x + p.y); }

double f2(Point2 p) { return 1.0 / (25.0 * (p.x * p.x + p.y * p.y) + 1.0); }

ScalarField builtin_function(std::string_view name) {
  if (name == "f1") return f1;
  if (name == "f2") return f2;
  throw ConfigError("unknown function '" + std::string(name) + "' (expected f1 or f2)");
}

BallConfig family_config(std::string_view family, int d, double phase) {
  if (family == "chebyshev-orbits") return gen_orbit_config(d, OrbitSchedule::chebyshev(d), MaxDisjoint{}, phase);
  if (family == "equidistant-orbits")
    return gen_orbit_config(d, OrbitSchedule::equidistant(d), MaxDisjoint{}, phase);
  if (family == "halton") return gen_halton_config(d, kHaltonMargin);
  if (family == "concentric") return counterexample_concentric(d);
  if (family == "collinear") return counterexample_collinear(d);
  if (family.starts_with("file:")) {
    const std::string path = replace_all(std::string(family.substr(5)), "{d}", std::to_string(d));
    return load_config(path, d);
  }
  throw ConfigError("unknown configuration family '" + std::string(family) + "'");
}

std::string_view to_string(ExperimentName name) {
  switch (name) {
    case ExperimentName::Conditioning: return "conditioning";
    case ExperimentName::InterpError: return "interp-error";
    case ExperimentName::LebesgueSweep: return "lebesgue-sweep";
    case ExperimentName::RandomRadii: return "random-radii";
    case ExperimentName::Counterexamples: return "counterexamples";
  }
  return "unknown";
}

ExperimentName parse_experiment_name(std::string_view text) {
  const std::string dashed = replace_all(std::string(text), "_", "-");
  for (auto n : {ExperimentName::Conditioning, ExperimentName::InterpError, ExperimentName::LebesgueSweep,
                 ExperimentName::RandomRadii, ExperimentName::Counterexamples})
    if (dashed == to_string(n)) return n;
  throw ConfigError("unknown experiment '" + std::string(text) + "'");
}

void ExperimentSpec::validate() const {
  if (degrees.empty()) throw ConfigError("degree list is empty");
  if (degrees.front() < 0) throw ConfigError("degrees must be nonnegative");
  if (std::adjacent_find(degrees.begin(), degrees.end(), std::greater_equal<>()) != degrees.end())
    throw ConfigError("degrees must be strictly ascending");
  if (trials < 1) throw ConfigError("trials must be positive");
  if (name == ExperimentName::Counterexamples && degrees.front() < 1)
    throw ConfigError("counterexamples need degree >= 1");
  builtin_function(function);
}

std::vector<std::string> ExperimentSpec::resolved_families() const {
  if (!families.empty()) return families;
  switch (name) {
    case ExperimentName::Conditioning: return {"halton", "chebyshev-orbits"};
    case ExperimentName::InterpError:
    case ExperimentName::LebesgueSweep: return {"halton", "equidistant-orbits", "chebyshev-orbits"};
    case ExperimentName::RandomRadii: return {"chebyshev-orbits"};
    case ExperimentName::Counterexamples: return {"concentric", "collinear", "chebyshev-orbits"};
  }
  return {};
}

ExperimentResult run_conditioning(const ExperimentSpec& spec) {
  spec.validate();
  struct Job {
    std::string family;
    int d;
    BasisKind kind;
  };
  std::vector<Job> jobs;
  for (const auto& family : spec.resolved_families())
    for (int d : spec.degrees)
      for (auto kind : {BasisKind::Monomial, BasisKind::ProductChebyshev}) jobs.push_back({family, d, kind});

  ExperimentResult result;
  result.header = {"d", "family", "basis", "cond", "sigma_ratio", "verdict"};
  result.rows = parallel_map(jobs, spec.jobs, [&](const Job& job) {
    const VandermondeSystem system(family_config(job.family, job.d, spec.phase), {job.kind, job.d});
    return Row{std::to_string(job.d), job.family, std::string(to_string(job.kind)),
               format_double(system.cond_estimate()), format_double(system.sigma_ratio()),
               std::string(to_string(system.report().verdict))};
  });
  return result;
}

ExperimentResult run_interp_error(const ExperimentSpec& spec) {
  spec.validate();
  const auto families = spec.resolved_families();
  const ScalarField f = builtin_function(spec.function);
  const ProbeFamily grid = grid_probes(spec);
  const std::vector<double> grid_integrals = probe_integrals(f, grid);

  struct Job {
    std::string family;
    int d;
  };
  std::vector<Job> jobs;
  for (const auto& family : families)
    for (int d : spec.degrees) jobs.push_back({family, d});

  ExperimentResult result;
  result.header = {"d", "family", "basis", "function", "error", "verdict"};
  if (!has_file_family(families)) result.warnings.push_back(kOptimalSkipped);
  std::atomic<bool> failed{false};
  result.rows = parallel_map(jobs, spec.jobs, [&](const Job& job) {
    const BasisSpec basis{spec.basis, job.d};
    const ErrorRow r = interpolation_error(family_config(job.family, job.d, spec.phase), basis, f, grid,
                                           grid_integrals);
    if (r.verdict == Verdict::Singular) failed = true;
    return Row{std::to_string(job.d), job.family, std::string(to_string(spec.basis)), spec.function,
               format_double(r.error), std::string(to_string(r.verdict))};
  });
  if (failed) result.exit_code = 2;
  return result;
}

ExperimentResult run_lebesgue_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const auto families = spec.resolved_families();
  const ProbeFamily grid = grid_probes(spec);

  struct Job {
    std::string family;
    int d;
  };
  std::vector<Job> jobs;
  for (const auto& family : families)
    for (int d : spec.degrees) jobs.push_back({family, d});

  ExperimentResult result;
  result.header = {"d", "family", "basis", "lambda", "lower_bound", "probe_count", "verdict"};
  if (!has_file_family(families)) result.warnings.push_back(kOptimalSkipped);
  std::atomic<bool> failed{false};
  result.rows = parallel_map(jobs, spec.jobs, [&](const Job& job) {
    const BallConfig config = family_config(job.family, job.d, spec.phase);
    const ProbeFamily probes = spec.probes.include_supports ? with_supports(grid, config) : grid;
    const VandermondeSystem system(config, {spec.basis, job.d});
    double lambda = std::nan("");
    if (system.singular())
      failed = true;
    else
      lambda = lebesgue_constant(system, probes).lambda;
    return Row{std::to_string(job.d), job.family, std::string(to_string(spec.basis)), format_double(lambda),
               format_double(lower_bound(job.d, 2)), std::to_string(probes.size()),
               std::string(to_string(system.report().verdict))};
  });
  if (failed) result.exit_code = 2;
  return result;
}

std::uint64_t trial_seed(std::uint64_t base, int d, int trial, bool overlap) {
  // splitmix64 finalizer over the packed coordinates.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t z = mix(base);
  z = mix(z ^ (static_cast<std::uint64_t>(d) << 32 | static_cast<std::uint32_t>(trial)));
  return mix(z ^ static_cast<std::uint64_t>(overlap));
}

ExperimentResult run_random_radii(const ExperimentSpec& spec) {
  spec.validate();
  const auto families = spec.resolved_families();
  const ScalarField f = builtin_function(spec.function);
  const ProbeFamily grid = grid_probes(spec);
  const std::vector<double> grid_integrals = probe_integrals(f, grid);

  enum class Mode { Fixed, Disjoint, Overlap };
  struct Job {
    std::string family;
    int d;
    int trial;
    Mode mode;
  };
  std::vector<Job> jobs;
  for (const auto& family : families)
    for (int d : spec.degrees) {
      jobs.push_back({family, d, 0, Mode::Fixed});
      for (int t = 1; t <= spec.trials; ++t) {
        jobs.push_back({family, d, t, Mode::Disjoint});
        jobs.push_back({family, d, t, Mode::Overlap});
      }
    }

  ExperimentResult result;
  result.header = {"d", "family", "trial", "overlap", "verdict", "sigma_ratio", "error"};
  std::atomic<bool> failed{false};
  result.rows = parallel_map(jobs, spec.jobs, [&](const Job& job) {
    BallConfig config = family_config(job.family, job.d, spec.phase);
    if (job.mode != Mode::Fixed)
      config = randomize_radii(config, trial_seed(spec.seed, job.d, job.trial, job.mode == Mode::Overlap),
                               job.mode == Mode::Overlap);
    const ErrorRow r = interpolation_error(config, {spec.basis, job.d}, f, grid, grid_integrals);
    if (r.verdict == Verdict::Singular) failed = true;
    static constexpr const char* kModes[] = {"fixed", "disjoint", "overlap"};
    return Row{std::to_string(job.d), job.family, std::to_string(job.trial),
               kModes[static_cast<int>(job.mode)], std::string(to_string(r.verdict)),
               format_double(r.sigma_ratio), format_double(r.error)};
  });
  if (failed) result.exit_code = 2;
  return result;
}

ExperimentResult run_counterexamples(const ExperimentSpec& spec) {
  spec.validate();
  struct Job {
    std::string family;
    int d;
  };
  std::vector<Job> jobs;
  for (const auto& family : spec.resolved_families())
    for (int d : spec.degrees) jobs.push_back({family, d});

  ExperimentResult result;
  result.header = {"d", "family", "basis", "sigma_ratio", "verdict", "expected"};
  std::atomic<bool> failed{false};
  result.rows = parallel_map(jobs, spec.jobs, [&](const Job& job) {
    const BallConfig config = family_config(job.family, job.d, spec.phase);
    const VandermondeSystem system(config, {spec.basis, job.d});
    const Verdict expected = config.expect_singular ? Verdict::Singular : Verdict::Unisolvent;
    const Verdict verdict = system.report().verdict;
    if (verdict != expected) failed = true;
    return Row{std::to_string(job.d), job.family, std::string(to_string(spec.basis)),
               format_double(system.sigma_ratio()), std::string(to_string(verdict)),
               std::string(to_string(expected))};
  });
  if (failed) result.exit_code = 2;
  return result;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  switch (spec.name) {
    case ExperimentName::Conditioning: return run_conditioning(spec);
    case ExperimentName::InterpError: return run_interp_error(spec);
    case ExperimentName::LebesgueSweep: return run_lebesgue_sweep(spec);
    case ExperimentName::RandomRadii: return run_random_radii(spec);
    case ExperimentName::Counterexamples: return run_counterexamples(spec);
  }
  throw ConfigError("unknown experiment");
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  auto line = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  };
  line(result.header);
  for (const auto& row : result.rows) line(row);
}

std::string_view tool_version() { return DISKINTERP_VERSION; }

std::string experiment_metadata(const ExperimentSpec& spec) {
  const PolarRule rule = PolarRule::standard();
  nlohmann::ordered_json j;
  j["tool"] = "diskinterp";
  j["version"] = tool_version();
  j["experiment"] = to_string(spec.name);
  j["degrees"] = spec.degrees;
  j["families"] = spec.resolved_families();
  j["basis"] = spec.name == ExperimentName::Conditioning ? "monomial+chebyshev" : to_string(spec.basis);
  j["seed"] = spec.seed;
  j["function"] = spec.function;
  j["trials"] = spec.trials;
  j["phase"] = spec.phase;
  j["halton_margin"] = kHaltonMargin;
  j["probe_family"] = {{"resolution", spec.probes.resolution},
                       {"radii", spec.probes.radii},
                       {"include_supports", spec.probes.include_supports},
                       {"domain_radius", spec.probes.domain_radius},
                       {"min_radius_fraction", kMinProbeRadiusFraction}};
  j["quadrature"] = {{"radial", rule.radial_points()}, {"angular", rule.angular_points()}};
  return j.dump(2) + "\n";
}

void save_experiment(const ExperimentSpec& spec, const ExperimentResult& result,
                     const std::filesystem::path& path) {
  std::ofstream csv(path);
  if (!csv) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(result, csv);
  std::ofstream meta(sidecar_path(path));
  if (!meta) throw IoError("cannot open '" + sidecar_path(path).string() + "' for writing");
  meta << experiment_metadata(spec);
  if (!csv || !meta) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace diskinterp

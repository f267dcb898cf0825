// diskinterp command-line harness.
//
// Exit codes: 0 success, 1 usage or invalid arguments, 2 unisolvence failure
// where unisolvence was expected, 3 I/O or parse error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diskinterp/errors.hpp"
#include "diskinterp/experiments.hpp"
#include "diskinterp/interpolation.hpp"
#include "diskinterp/lebesgue.hpp"

namespace {

using namespace diskinterp;

constexpr int kExitUsage = 1;
constexpr int kExitUnisolvence = 2;
constexpr int kExitIo = 3;

struct Options {
  int degree = -1;
  std::string degrees;
  std::vector<std::string> families;
  std::string basis = "chebyshev";
  std::uint64_t seed = 1;
  int probe_resolution = 41;
  std::vector<double> probe_radii{0.05, 0.1, 0.2, 0.4};
  bool no_probe_supports = false;
  std::string out;
  bool allow_overlap = false;
  bool random_radii = false;
  double phase = 0.0;
  std::string function = "f1";
  int trials = 20;
  std::string config;
  unsigned jobs = 0;
  std::string experiment;
};

// "1-8", "2,4,6" or a mix such as "1-3,10".
std::vector<int> parse_degree_list(const std::string& text) {
  std::vector<int> out;
  auto number = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ConfigError("bad degree '" + std::string(s) + "' in '" + text + "'");
    return v;
  };
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto dash = item.find('-', 1);
    if (dash == std::string_view::npos) {
      out.push_back(number(item));
    } else {
      const int lo = number(item.substr(0, dash)), hi = number(item.substr(dash + 1));
      if (lo > hi) throw ConfigError("empty degree range '" + std::string(item) + "'");
      for (int d = lo; d <= hi; ++d) out.push_back(d);
    }
  }
  return out;
}

ProbeSpec probe_spec(const Options& o) {
  ProbeSpec spec;
  spec.resolution = o.probe_resolution;
  spec.radii = o.probe_radii;
  spec.include_supports = !o.no_probe_supports;
  return spec;
}

// --config wins over --family/--degree.
BallConfig resolve_config(const Options& o) {
  if (!o.config.empty()) return load_config(o.config, o.degree >= 0 ? std::optional<int>(o.degree) : std::nullopt);
  if (o.degree < 0) throw ConfigError("--degree is required without --config");
  if (o.families.size() != 1) throw ConfigError("exactly one --family is required without --config");
  BallConfig config = family_config(o.families.front(), o.degree, o.phase);
  if (o.random_radii) config = randomize_radii(config, o.seed, o.allow_overlap);
  return config;
}

// Runs body with stdout or the --out file as the sink.
template <class Body>
void with_output(const Options& o, Body body) {
  if (o.out.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw IoError("cannot open '" + o.out + "' for writing");
  body(file);
  if (!file) throw IoError("write to '" + o.out + "' failed");
}

int cmd_gen_config(const Options& o) {
  const BallConfig config = resolve_config(o);
  if (o.out.empty()) {
    std::cout << "x,y,r\n";
    for (const auto& b : config.balls)
      std::cout << format_double(b.centre.x) << ',' << format_double(b.centre.y) << ','
                << format_double(b.radius) << '\n';
  } else {
    save_config(config, o.out);
  }
  return 0;
}

int cmd_check(const Options& o) {
  const BallConfig config = resolve_config(o);
  const auto report = check_unisolvence(config, {parse_basis_kind(o.basis), config.degree});
  with_output(o, [&](std::ostream& out) {
    out << "d,label,basis,sigma_ratio,cond,verdict\n"
        << config.degree << ',' << config.label << ',' << o.basis << ',' << format_double(report.sigma_ratio)
        << ',' << format_double(report.cond) << ',' << to_string(report.verdict) << '\n';
  });
  const bool expected = config.expect_singular ? report.verdict == Verdict::Singular
                                               : report.verdict == Verdict::Unisolvent;
  return expected ? 0 : kExitUnisolvence;
}

int cmd_vandermonde(const Options& o) {
  const BallConfig config = resolve_config(o);
  const BasisSpec basis{parse_basis_kind(o.basis), config.degree};
  const VandermondeSystem system(config, basis);
  const auto indices = enumerate_basis(basis);
  with_output(o, [&](std::ostream& out) {
    out << "i,a,b,j,value\n";
    for (std::size_t i = 0; i < system.size(); ++i)
      for (std::size_t j = 0; j < system.size(); ++j)
        out << i << ',' << indices[i].a << ',' << indices[i].b << ',' << j << ','
            << format_double(system.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
            << '\n';
  });
  std::cerr << "sigma_ratio=" << format_double(system.sigma_ratio())
            << " cond=" << format_double(system.cond_estimate()) << '\n';
  return 0;
}

int cmd_interp(const Options& o) {
  const BallConfig config = resolve_config(o);
  const BasisSpec basis{parse_basis_kind(o.basis), config.degree};
  const ScalarField f = builtin_function(o.function);
  const Interpolator interp(config, basis);
  const PolynomialRep p = interp(f);
  const auto probes = gen_probe_family(probe_spec(o), &config);
  const auto indices = enumerate_basis(basis);
  with_output(o, [&](std::ostream& out) {
    out << "t,a,b,coefficient\n";
    for (std::size_t t = 0; t < indices.size(); ++t)
      out << t << ',' << indices[t].a << ',' << indices[t].b << ',' << format_double(p.coeffs()[t]) << '\n';
  });
  std::cerr << "error_norm=" << format_double(error_norm(f, p, probes)) << " probes=" << probes.size() << '\n';
  return 0;
}

int cmd_lebesgue(const Options& o) {
  const BallConfig config = resolve_config(o);
  const BasisSpec basis{parse_basis_kind(o.basis), config.degree};
  const auto probes = gen_probe_family(probe_spec(o), &config);
  const auto r = lebesgue_constant(config, basis, probes);
  with_output(o, [&](std::ostream& out) {
    out << "d,label,basis,lambda,lower_bound,probe_count,argmax_x,argmax_y,argmax_r\n"
        << r.degree << ',' << config.label << ',' << o.basis << ',' << format_double(r.lambda) << ','
        << format_double(r.lower_bound) << ',' << r.probe_count << ',' << format_double(r.argmax_disc.centre.x)
        << ',' << format_double(r.argmax_disc.centre.y) << ',' << format_double(r.argmax_disc.radius) << '\n';
  });
  return 0;
}

int cmd_experiment(const Options& o) {
  ExperimentSpec spec;
  spec.name = parse_experiment_name(o.experiment);
  if (!o.degrees.empty())
    spec.degrees = parse_degree_list(o.degrees);
  else if (o.degree >= 0)
    spec.degrees = {o.degree};
  else
    throw ConfigError("--degrees or --degree is required");
  spec.families = o.families;
  spec.basis = parse_basis_kind(o.basis);
  spec.seed = o.seed;
  spec.function = o.function;
  spec.trials = o.trials;
  spec.phase = o.phase;
  spec.probes = probe_spec(o);
  spec.jobs = o.jobs;

  const ExperimentResult result = run_experiment(spec);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  if (o.out.empty())
    write_csv(result, std::cout);
  else
    save_experiment(spec, result, o.out);
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial interpolation from integrals over discs."};
  app.set_version_flag("--version", std::string(diskinterp::tool_version()));
  app.require_subcommand(1);
  Options o;

  auto config_source = [&](CLI::App* sub) {
    sub->add_option("--degree", o.degree, "Total degree d")->check(CLI::NonNegativeNumber);
    sub->add_option("--family", o.families,
                    "chebyshev-orbits | equidistant-orbits | halton | concentric | collinear | file:<path>");
    sub->add_option("--config", o.config, "Config CSV (x,y,r) with optional .json sidecar");
    sub->add_option("--phase", o.phase, "Angular phase of the orbits (radians)");
    sub->add_option("--seed", o.seed, "Seed for --random-radii");
    sub->add_flag("--random-radii", o.random_radii, "Redraw the radii at random");
    sub->add_flag("--allow-overlap", o.allow_overlap, "Random radii may overlap");
    sub->add_option("--out", o.out, "Output path (default stdout)");
  };
  auto basis_option = [&](CLI::App* sub) {
    sub->add_option("--basis", o.basis, "monomial | chebyshev")
        ->check(CLI::IsMember({"monomial", "chebyshev"}));
  };
  auto probe_options = [&](CLI::App* sub) {
    sub->add_option("--probe-resolution", o.probe_resolution, "Probe grid points per axis")
        ->check(CLI::PositiveNumber);
    sub->add_option("--probe-radii", o.probe_radii, "Probe disc radii")->delimiter(',');
    sub->add_flag("--no-probe-supports", o.no_probe_supports, "Leave the support discs out of the probes");
  };

  auto* gen = app.add_subcommand("gen-config", "Write a disc configuration");
  config_source(gen);
  auto* check = app.add_subcommand("check", "Report sigma_min/sigma_max and the unisolvence verdict");
  config_source(check);
  basis_option(check);
  auto* vand = app.add_subcommand("vandermonde", "Dump the Vandermonde matrix V(i, j) = int_{B_j} p_i");
  config_source(vand);
  basis_option(vand);
  auto* interp = app.add_subcommand("interp", "Interpolate f1 or f2 and print the coefficients");
  config_source(interp);
  basis_option(interp);
  probe_options(interp);
  interp->add_option("--function", o.function, "f1 | f2")->check(CLI::IsMember({"f1", "f2"}));
  auto* leb = app.add_subcommand("lebesgue", "Estimate the Lebesgue constant over the probe family");
  config_source(leb);
  basis_option(leb);
  probe_options(leb);

  auto* exp = app.add_subcommand("experiment", "Run a numerical experiment and emit CSV");
  exp->add_option("name", o.experiment,
                  "conditioning | interp-error | lebesgue-sweep | random-radii | counterexamples")
      ->required();
  exp->add_option("--degrees", o.degrees, "Degree list, e.g. 1-8 or 2,4,10");
  exp->add_option("--degree", o.degree, "Single degree")->check(CLI::NonNegativeNumber);
  exp->add_option("--family", o.families, "Configuration family (repeatable)");
  basis_option(exp);
  exp->add_option("--seed", o.seed, "Base seed");
  exp->add_option("--function", o.function, "f1 | f2")->check(CLI::IsMember({"f1", "f2"}));
  exp->add_option("--trials", o.trials, "Random-radius trials per degree")->check(CLI::PositiveNumber);
  exp->add_option("--phase", o.phase, "Angular phase of the orbits (radians)");
  exp->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  exp->add_option("--out", o.out, "CSV path; a .json metadata sidecar is written next to it");
  probe_options(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen_config(o);
    if (*check) return cmd_check(o);
    if (*vand) return cmd_vandermonde(o);
    if (*interp) return cmd_interp(o);
    if (*leb) return cmd_lebesgue(o);
    if (*exp) return cmd_experiment(o);
  } catch (const diskinterp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const diskinterp::UnisolvenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnisolvence;
  } catch (const diskinterp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "diskinterp/errors.hpp"
#include "diskinterp/geometry.hpp"

namespace diskinterp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_field(std::string_view text, std::size_t line, const char* name) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("cannot parse " + std::string(name) + " from '" + std::string(text) + "'", line);
  return value;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Degree d with dim P_d(R^2) == count, if any.
std::optional<int> degree_for_count(std::size_t count) {
  for (int d = 0;; ++d) {
    const auto n = static_cast<std::size_t>(dim_poly_space(d, 2));
    if (n == count) return d;
    if (n > count) return std::nullopt;
  }
}

}  // namespace

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  auto out = path;
  out += ".json";
  return out;
}

void save_config(const BallConfig& config, const std::filesystem::path& path) {
  std::ofstream csv(path);
  if (!csv) throw IoError("cannot open '" + path.string() + "' for writing");
  csv << "x,y,r\n";
  for (const auto& b : config.balls)
    csv << format_double(b.centre.x) << ',' << format_double(b.centre.y) << ','
        << format_double(b.radius) << '\n';
  if (!csv) throw IoError("write failed for '" + path.string() + "'");

  const nlohmann::ordered_json meta = {
      {"degree", config.degree},
      {"label", config.label},
      {"domain_radius", config.domain_radius},
      {"allow_exceed", config.allow_exceed},
      {"expect_singular", config.expect_singular},
  };
  std::ofstream side(sidecar_path(path));
  if (!side) throw IoError("cannot open '" + sidecar_path(path).string() + "' for writing");
  side << meta.dump(2) << '\n';
}

BallConfig load_config(const std::filesystem::path& path, std::optional<int> degree_override) {
  std::ifstream csv(path);
  if (!csv) throw IoError("cannot open '" + path.string() + "'");

  BallConfig config;
  config.label = "file:" + path.string();

  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(csv, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      std::string compact;
      for (char c : text)
        if (c != ' ' && c != '\t') compact += c;
      if (compact != "x,y,r") throw ParseError("expected header 'x,y,r'", line_no);
      header_seen = true;
      continue;
    }
    const auto c1 = text.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos)
      throw ParseError("expected three comma-separated fields", line_no);
    const double x = parse_field(text.substr(0, c1), line_no, "x");
    const double y = parse_field(text.substr(c1 + 1, c2 - c1 - 1), line_no, "y");
    const double r = parse_field(text.substr(c2 + 1), line_no, "r");
    try {
      config.balls.push_back(make_ball({x, y}, r));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!header_seen) throw ParseError("empty config file '" + path.string() + "'", 0);

  std::optional<int> degree = degree_override;
  const auto side = sidecar_path(path);
  if (std::filesystem::exists(side)) {
    std::ifstream in(side);
    nlohmann::json meta;
    try {
      meta = nlohmann::json::parse(in);
      if (!degree) degree = meta.at("degree").get<int>();
      if (meta.contains("label")) config.label = meta["label"].get<std::string>();
      config.domain_radius = meta.value("domain_radius", 1.0);
      config.allow_exceed = meta.value("allow_exceed", false);
      config.expect_singular = meta.value("expect_singular", false);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("sidecar '" + side.string() + "': " + e.what(), 0);
    }
  }
  if (!degree) {
    degree = degree_for_count(config.balls.size());
    if (!degree)
      throw ParseError(std::to_string(config.balls.size()) +
                           " balls is not dim P_d(R^2) for any degree d",
                       0);
  }
  config.degree = *degree;
  if (config.degree < 0) throw ParseError("negative degree", 0);
  const auto expected = static_cast<std::size_t>(dim_poly_space(config.degree, 2));
  if (config.balls.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " balls for degree " +
                         std::to_string(config.degree) + ", found " +
                         std::to_string(config.balls.size()),
                     0);
  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw ParseError(e.what(), 0);
  }
  return config;
}

}  // namespace diskinterp

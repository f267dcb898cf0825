#include "diskinterp/polyspace.hpp"

#include <string>

#include "diskinterp/errors.hpp"

namespace diskinterp {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > INT64_MAX) throw DomainError("binomial coefficient overflows int64");
  }
  return static_cast<std::int64_t>(result);
}

std::vector<double> powers(double t, int max_power) {
  std::vector<double> out(static_cast<std::size_t>(max_power) + 1);
  out[0] = 1.0;
  for (int k = 1; k <= max_power; ++k) out[k] = out[k - 1] * t;
  return out;
}

std::vector<double> chebyshev_values(double t, int max_index) {
  std::vector<double> out(static_cast<std::size_t>(max_index) + 1);
  out[0] = 1.0;
  if (max_index >= 1) out[1] = t;
  for (int k = 2; k <= max_index; ++k) out[k] = 2.0 * t * out[k - 1] - out[k - 2];
  return out;
}

}  // namespace

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Monomial:
      return "monomial";
    case BasisKind::ProductChebyshev:
      return "chebyshev";
  }
  return "unknown";
}

BasisKind parse_basis_kind(std::string_view name) {
  if (name == "monomial") return BasisKind::Monomial;
  if (name == "chebyshev") return BasisKind::ProductChebyshev;
  throw DomainError("unknown basis '" + std::string(name) + "'");
}

std::size_t BasisSpec::size() const {
  return static_cast<std::size_t>(dim_poly_space(degree, 2));
}

std::int64_t dim_poly_space(int d, int n) {
  if (d < 0) throw DomainError("polynomial degree must be nonnegative");
  if (n < 1) throw DomainError("space dimension must be at least 1");
  return binomial(d + n, n);
}

std::int64_t dim_sphere_space(int d, int n) {
  if (d < 0) throw DomainError("polynomial degree must be nonnegative");
  if (n < 2) throw DomainError("sphere space needs ambient dimension >= 2");
  return binomial(d + n, n) - binomial(d + n - 2, n);
}

std::vector<MultiIndex> enumerate_basis(const BasisSpec& spec) {
  if (spec.degree < 0) throw DomainError("basis degree must be nonnegative");
  std::vector<MultiIndex> out;
  out.reserve(spec.size());
  for (int total = 0; total <= spec.degree; ++total) {
    for (int a = total; a >= 0; --a) out.push_back({a, total - a});
  }
  return out;
}

std::size_t basis_position(MultiIndex index) {
  const int total = index.degree();
  return static_cast<std::size_t>(total) * (total + 1) / 2 +
         static_cast<std::size_t>(total - index.a);
}

double chebyshev_t(int k, double t) {
  if (k < 0) throw DomainError("Chebyshev index must be nonnegative");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<std::int64_t> chebyshev_power_coefficients(int k) {
  if (k < 0) throw DomainError("Chebyshev index must be nonnegative");
  std::vector<std::int64_t> prev{1};
  if (k == 0) return prev;
  std::vector<std::int64_t> cur{0, 1};
  for (int n = 1; n < k; ++n) {
    // T_{n+1} = 2 t T_n - T_{n-1}
    std::vector<std::int64_t> next(static_cast<std::size_t>(n) + 2, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::int64_t twice = 0;
      if (__builtin_mul_overflow(cur[i], std::int64_t{2}, &twice))
        throw DomainError("Chebyshev coefficients overflow int64");
      next[i + 1] = twice;
    }
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (__builtin_sub_overflow(next[i], prev[i], &next[i]))
        throw DomainError("Chebyshev coefficients overflow int64");
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::vector<double>> shifted_factor_table(BasisKind kind,
                                                      int max_index,
                                                      double shift,
                                                      double scale) {
  if (max_index < 0) throw DomainError("factor index must be nonnegative");
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(max_index) + 1);
  rows.push_back({1.0});
  if (max_index == 0) return rows;
  rows.push_back({shift, scale});
  for (int k = 1; k < max_index; ++k) {
    const auto& cur = rows[k];
    std::vector<double> next(cur.size() + 1, 0.0);
    // next = (shift + scale u) * cur           (monomial)
    // next = 2 (shift + scale u) * cur - prev  (Chebyshev)
    const double factor = kind == BasisKind::Monomial ? 1.0 : 2.0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += factor * shift * cur[i];
      next[i + 1] += factor * scale * cur[i];
    }
    if (kind == BasisKind::ProductChebyshev) {
      const auto& prev = rows[k - 1];
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

PolynomialRep::PolynomialRep(BasisSpec basis, std::vector<double> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  if (basis_.degree < 0) throw DomainError("basis degree must be nonnegative");
  if (coeffs_.size() != basis_.size()) {
    throw DomainError("expected " + std::to_string(basis_.size()) +
                      " coefficients for degree " + std::to_string(basis_.degree) +
                      ", got " + std::to_string(coeffs_.size()));
  }
}

PolynomialRep PolynomialRep::zero(BasisSpec basis) {
  return PolynomialRep(basis, std::vector<double>(basis.size(), 0.0));
}

PolynomialRep PolynomialRep::constant(BasisSpec basis, double value) {
  auto p = zero(basis);
  p.coeffs_[0] = value;  // both bases start with the constant 1
  return p;
}

double PolynomialRep::eval(Point2 p) const {
  const int d = basis_.degree;
  const auto fx = basis_.kind == BasisKind::Monomial ? powers(p.x, d) : chebyshev_values(p.x, d);
  const auto fy = basis_.kind == BasisKind::Monomial ? powers(p.y, d) : chebyshev_values(p.y, d);
  double sum = 0.0;
  std::size_t k = 0;
  for (int total = 0; total <= d; ++total) {
    for (int a = total; a >= 0; --a) sum += coeffs_[k++] * fx[a] * fy[total - a];
  }
  return sum;
}

double eval_poly(const PolynomialRep& p, Point2 point) { return p.eval(point); }

PolynomialRep to_monomial(const PolynomialRep& p) {
  if (p.basis().kind == BasisKind::Monomial) return p;
  const int d = p.basis().degree;
  std::vector<std::vector<std::int64_t>> cheb;
  cheb.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) cheb.push_back(chebyshev_power_coefficients(k));

  const BasisSpec target{BasisKind::Monomial, d};
  std::vector<double> out(target.size(), 0.0);
  const auto index = enumerate_basis(p.basis());
  for (std::size_t k = 0; k < index.size(); ++k) {
    const double c = p.coeffs()[k];
    if (c == 0.0) continue;
    const auto& ca = cheb[index[k].a];
    const auto& cb = cheb[index[k].b];
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] == 0) continue;
      for (std::size_t j = 0; j < cb.size(); ++j) {
        if (cb[j] == 0) continue;
        const __int128 product = static_cast<__int128>(ca[i]) * cb[j];
        out[basis_position({static_cast<int>(i), static_cast<int>(j)})] +=
            c * static_cast<double>(product);
      }
    }
  }
  return PolynomialRep(target, std::move(out));
}

}  // namespace diskinterp

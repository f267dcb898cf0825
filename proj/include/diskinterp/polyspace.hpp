#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace diskinterp {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Exponent pair (a, b) of x^a y^b, or index pair of T_a(x) T_b(y).
struct MultiIndex {
  int a = 0;
  int b = 0;

  constexpr int degree() const noexcept { return a + b; }
  friend constexpr bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

enum class BasisKind { Monomial, ProductChebyshev };

std::string_view to_string(BasisKind kind);
BasisKind parse_basis_kind(std::string_view name);

// Total-degree basis of P_d(R^2). Basis functions are ordered graded
// lexicographically: by total degree, then by descending x exponent.
struct BasisSpec {
  BasisKind kind = BasisKind::Monomial;
  int degree = 0;

  std::size_t size() const;
  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

// dim P_d(R^n) = binom(d + n, n).
std::int64_t dim_poly_space(int d, int n);

// dim P_d(S^{n-1}) = binom(d + n, n) - binom(d + n - 2, n); 2d + 1 for n = 2.
std::int64_t dim_sphere_space(int d, int n);

std::vector<MultiIndex> enumerate_basis(const BasisSpec& spec);

// Position of (a, b) in the graded-lex order of any basis with degree >= a + b.
std::size_t basis_position(MultiIndex index);

// Chebyshev polynomial of the first kind, three-term recurrence.
double chebyshev_t(int k, double t);

// Integer coefficients of T_k in powers of t, lowest power first.
std::vector<std::int64_t> chebyshev_power_coefficients(int k);

// Coefficients (lowest power first, length k + 1) of the univariate basis
// factor of index k, composed with t = shift + scale * u, as a polynomial in
// u. Row k of the result holds the factor of index k, for k = 0..max_index.
std::vector<std::vector<double>> shifted_factor_table(BasisKind kind,
                                                      int max_index,
                                                      double shift,
                                                      double scale);

class PolynomialRep {
 public:
  PolynomialRep(BasisSpec basis, std::vector<double> coeffs);

  static PolynomialRep zero(BasisSpec basis);
  static PolynomialRep constant(BasisSpec basis, double value);

  const BasisSpec& basis() const noexcept { return basis_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  double operator()(Point2 p) const { return eval(p); }
  double eval(Point2 p) const;

 private:
  BasisSpec basis_;
  std::vector<double> coeffs_;
};

double eval_poly(const PolynomialRep& p, Point2 point);

// Equivalent representation in the monomial basis of the same degree.
PolynomialRep to_monomial(const PolynomialRep& p);

}  // namespace diskinterp

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgchrom/integer.hpp"

namespace sgchrom {

// Bivariate polynomial with exact integer coefficients over formal variables
// (lambda, mu). Terms map (deg_lambda, deg_mu) -> nonzero coefficient; the
// zero polynomial has no terms.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;

  BivarPoly() = default;

  static BivarPoly constant(Integer c);
  static BivarPoly monomial(int i, int j, Integer c = 1);
  static BivarPoly lambda() { return monomial(1, 0); }
  static BivarPoly mu() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  // Degrees are -1 for the zero polynomial.
  int degree_lambda() const;
  int degree_mu() const;
  int total_degree() const;
  const std::map<Key, Integer>& terms() const { return terms_; }
  Integer coeff(int i, int j) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator-() const;
  BivarPoly scaled(const Integer& c) const;

  bool operator==(const BivarPoly&) const = default;

  // Exact evaluation; T is Integer or Rational.
  template <typename T>
  T eval(const T& a, const T& b) const {
    if (terms_.empty()) return T(0);
    std::vector<T> pa = powers<T>(a, degree_lambda());
    std::vector<T> pb = powers<T>(b, degree_mu());
    T acc(0);
    for (const auto& [key, c] : terms_) {
      T term(c);
      term *= pa[static_cast<std::size_t>(key.first)];
      term *= pb[static_cast<std::size_t>(key.second)];
      acc += term;
    }
    return acc;
  }
  Integer eval_int(const Integer& a, const Integer& b) const { return eval<Integer>(a, b); }

  // Partial substitution, leaving the other variable formal.
  BivarPoly substitute_lambda(const Integer& a) const;
  BivarPoly substitute_mu(const Integer& b) const;
  BivarPoly derivative_mu() const;
  BivarPoly swap_variables() const;

  void add_term(int i, int j, const Integer& c);

 private:
  std::map<Key, Integer> terms_;

  template <typename T>
  static std::vector<T> powers(const T& x, int up_to) {
    std::vector<T> p(static_cast<std::size_t>(up_to) + 1, T(1));
    for (int e = 1; e <= up_to; ++e)
      p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e - 1)] * x;
    return p;
  }
};

BivarPoly pow(const BivarPoly& base, int exponent);

// Canonical text form: terms sorted by total degree descending, then lambda
// degree descending; each term printed as c*<v1>^i*<v2>^j with zero exponents
// omitted; the zero polynomial prints "0".
std::string to_string(const BivarPoly& p, std::string_view var1 = "λ",
                      std::string_view var2 = "μ");
// Parses the canonical text form back (used for test fixtures).
BivarPoly parse_poly(std::string_view text, std::string_view var1 = "λ",
                     std::string_view var2 = "μ");

// Canonically ordered (i, j, coefficient) rows, matching the text form.
std::vector<std::tuple<int, int, Integer>> ordered_terms(const BivarPoly& p);

// Exact tensor-product Lagrange interpolation on the full grid
// lambda_points x mu_points; both point lists must consist of distinct values
// and have size degree_bound+1, and values[i][j] is the value at
// (lambda_points[i], mu_points[j]). Throws if a grid coordinate repeats or
// any final coefficient is non-integral.
BivarPoly interpolate_grid(const std::vector<Integer>& lambda_points,
                           const std::vector<Integer>& mu_points,
                           const std::vector<std::vector<Integer>>& values,
                           int degree_bound);

}  // namespace sgchrom

#include "sgchrom/bivar_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

namespace sgchrom {

BivarPoly BivarPoly::constant(Integer c) {
  BivarPoly p;
  p.add_term(0, 0, c);
  return p;
}

BivarPoly BivarPoly::monomial(int i, int j, Integer c) {
  if (i < 0 || j < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  BivarPoly p;
  p.add_term(i, j, c);
  return p;
}

void BivarPoly::add_term(int i, int j, const Integer& c) {
  if (c == 0) return;
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    terms_.emplace(Key{i, j}, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BivarPoly::degree_lambda() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

int BivarPoly::degree_mu() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

Integer BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out;
  for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, -c);
  return out;
}

BivarPoly BivarPoly::scaled(const Integer& c) const {
  BivarPoly out;
  for (const auto& [key, coef] : terms_) out.add_term(key.first, key.second, coef * c);
  return out;
}

BivarPoly BivarPoly::substitute_lambda(const Integer& a) const {
  BivarPoly out;
  if (terms_.empty()) return out;
  std::vector<Integer> pa = powers<Integer>(a, degree_lambda());
  for (const auto& [key, c] : terms_)
    out.add_term(0, key.second, c * pa[static_cast<std::size_t>(key.first)]);
  return out;
}

BivarPoly BivarPoly::substitute_mu(const Integer& b) const {
  BivarPoly out;
  if (terms_.empty()) return out;
  std::vector<Integer> pb = powers<Integer>(b, degree_mu());
  for (const auto& [key, c] : terms_)
    out.add_term(key.first, 0, c * pb[static_cast<std::size_t>(key.second)]);
  return out;
}

BivarPoly BivarPoly::derivative_mu() const {
  BivarPoly out;
  for (const auto& [key, c] : terms_)
    if (key.second > 0) out.add_term(key.first, key.second - 1, c * key.second);
  return out;
}

BivarPoly BivarPoly::swap_variables() const {
  BivarPoly out;
  for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c);
  return out;
}

BivarPoly pow(const BivarPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  BivarPoly out = BivarPoly::constant(1);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

std::vector<std::tuple<int, int, Integer>> ordered_terms(const BivarPoly& p) {
  std::vector<std::tuple<int, int, Integer>> rows;
  rows.reserve(p.terms().size());
  for (const auto& [key, c] : p.terms()) rows.emplace_back(key.first, key.second, c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    int ta = std::get<0>(a) + std::get<1>(a);
    int tb = std::get<0>(b) + std::get<1>(b);
    if (ta != tb) return ta > tb;
    return std::get<0>(a) > std::get<0>(b);
  });
  return rows;
}

std::string to_string(const BivarPoly& p, std::string_view var1, std::string_view var2) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, j, c] : ordered_terms(p)) {
    Integer mag = c;
    if (first) {
      if (c < 0) {
        out += '-';
        mag = -c;
      }
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) mag = -c;
    }
    out += mag.str();
    if (i > 0) {
      out += '*';
      out += var1;
      out += '^';
      out += std::to_string(i);
    }
    if (j > 0) {
      out += '*';
      out += var2;
      out += '^';
      out += std::to_string(j);
    }
  }
  return out;
}

namespace {

// Splits "c*v^i*..." factors of one term and accumulates it onto `out`.
void parse_term(std::string_view term, int sign, std::string_view var1,
                std::string_view var2, BivarPoly& out) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial term '" + std::string(term) + "': " + why);
  };
  if (pos >= term.size() || !(std::isdigit(static_cast<unsigned char>(term[pos])) || term[pos] == '-'))
    fail("expected a coefficient");
  std::size_t start = pos;
  if (term[pos] == '-') ++pos;
  while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
  if (pos == start || (term[start] == '-' && pos == start + 1)) fail("expected digits");
  Integer c(std::string(term.substr(start, pos - start)));
  int di = 0, dj = 0;
  while (pos < term.size()) {
    if (term[pos] != '*') fail("expected '*'");
    ++pos;
    int* slot = nullptr;
    if (term.substr(pos, var1.size()) == var1) {
      slot = &di;
      pos += var1.size();
    } else if (term.substr(pos, var2.size()) == var2) {
      slot = &dj;
      pos += var2.size();
    } else {
      fail("unknown variable");
    }
    if (pos >= term.size() || term[pos] != '^') fail("expected '^'");
    ++pos;
    std::size_t dstart = pos;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    if (pos == dstart) fail("expected an exponent");
    *slot = std::stoi(std::string(term.substr(dstart, pos - dstart)));
  }
  out.add_term(di, dj, c * sign);
}

}  // namespace

BivarPoly parse_poly(std::string_view text, std::string_view var1, std::string_view var2) {
  BivarPoly out;
  if (text == "0") return out;
  std::size_t pos = 0;
  int sign = +1;
  while (pos < text.size()) {
    std::size_t next = text.size();
    std::size_t plus = text.find(" + ", pos);
    std::size_t minus = text.find(" - ", pos);
    int next_sign = +1;
    if (minus < plus) {
      next = minus;
      next_sign = -1;
    } else if (plus < minus) {
      next = plus;
      next_sign = +1;
    }
    parse_term(text.substr(pos, next - pos), sign, var1, var2, out);
    if (next == text.size()) break;
    pos = next + 3;
    sign = next_sign;
  }
  return out;
}

namespace {

// Coefficients of the unique degree-<=n interpolant through (xs[i], ys[i]).
std::vector<Rational> lagrange(const std::vector<Rational>& xs,
                               const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> acc(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};  // product of (x - xs[j]) / (xs[i] - xs[j])
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rational scale = ys[i] / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += basis[d] * scale;
  }
  return acc;
}

}  // namespace

BivarPoly interpolate_grid(const std::vector<Integer>& lambda_points,
                           const std::vector<Integer>& mu_points,
                           const std::vector<std::vector<Integer>>& values,
                           int degree_bound) {
  const std::size_t m = static_cast<std::size_t>(degree_bound) + 1;
  if (degree_bound < 0) throw std::invalid_argument("interpolation degree bound must be >= 0");
  if (lambda_points.size() != m || mu_points.size() != m)
    throw std::invalid_argument("interpolation needs degree_bound+1 points per variable");
  for (auto pts : {&lambda_points, &mu_points}) {
    std::vector<Integer> sorted = *pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate interpolation grid coordinate");
  }
  if (values.size() != m)
    throw std::invalid_argument("value grid has wrong number of rows");
  for (const auto& row : values)
    if (row.size() != m) throw std::invalid_argument("value grid has wrong number of columns");

  std::vector<Rational> lx(m), mx(m);
  for (std::size_t i = 0; i < m; ++i) lx[i] = Rational(lambda_points[i]);
  for (std::size_t j = 0; j < m; ++j) mx[j] = Rational(mu_points[j]);

  // First interpolate along lambda for each fixed mu point, then interpolate
  // each lambda coefficient along mu.
  std::vector<std::vector<Rational>> per_mu(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rational> ys(m);
    for (std::size_t i = 0; i < m; ++i) ys[i] = Rational(values[i][j]);
    per_mu[j] = lagrange(lx, ys);
  }

  BivarPoly out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> ys(m);
    for (std::size_t j = 0; j < m; ++j) ys[j] = per_mu[j][i];
    std::vector<Rational> coeffs = lagrange(mx, ys);
    for (std::size_t j = 0; j < m; ++j) {
      if (coeffs[j] == 0) continue;
      if (boost::multiprecision::denominator(coeffs[j]) != 1)
        throw std::runtime_error("interpolation produced a non-integral coefficient at lambda^" +
                                 std::to_string(i) + "*mu^" + std::to_string(j));
      out.add_term(static_cast<int>(i), static_cast<int>(j),
                   Integer(boost::multiprecision::numerator(coeffs[j])));
    }
  }
  return out;
}

}  // namespace sgchrom

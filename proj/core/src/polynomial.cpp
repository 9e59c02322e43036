#include "powerbetti/polynomial.hpp"

#include <algorithm>

#include "powerbetti/errors.hpp"

namespace powerbetti {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("malformed rational '" + text + "'");
  q.canonicalize();
  return q;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int d) {
  std::vector<Rational> v(static_cast<std::size_t>(d) + 1, 0);
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int RationalPolynomial::degree() const noexcept {
  return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1;
}

Rational RationalPolynomial::coefficient(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= c_.size()) return 0;
  return c_[static_cast<std::size_t>(d)];
}

Rational RationalPolynomial::leading_coefficient() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) throw DomainError("the zero polynomial has no monic normalization");
  const Rational lead = c_.back();
  std::vector<Rational> v(c_);
  for (auto& x : v) x /= lead;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + Rational(-1) * b;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
  std::vector<Rational> v(p.c_);
  for (auto& x : v) x *= s;
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = c_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    const bool unit = mag == 1;
    if (!unit || d == 0) {
      out += mag.get_str();
      if (d > 0 && mag.get_den() != 1) out += '*';
    }
    if (d >= 1) out += var;
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  const Rational lead = b.leading_coefficient();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int d = a.degree(); d >= db; --d) {
    const Rational f = r[static_cast<std::size_t>(d)] / lead;
    q[static_cast<std::size_t>(d - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(d - db + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no square-free decomposition");
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (p.degree() < 1) return out;
  const RationalPolynomial dp = p.derivative();
  const RationalPolynomial b = gcd(p, dp);
  RationalPolynomial c = divmod(p, b).first;
  RationalPolynomial d = divmod(dp, b).first - c.derivative();
  for (int m = 1; c.degree() >= 1; ++m) {
    const RationalPolynomial a = gcd(c, d);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
    if (a.degree() >= 1) out.emplace_back(a, m);
  }
  return out;
}

RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx = points[i].first - points[i - level].first;
      if (dx == 0) throw DomainError("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  // Horner on the Newton form.
  RationalPolynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * RationalPolynomial(std::vector<Rational>{-points[i].first, 1}) +
             RationalPolynomial::constant(dd[i]);
  }
  return result;
}

}  // namespace powerbetti

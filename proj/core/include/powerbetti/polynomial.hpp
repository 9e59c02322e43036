#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "powerbetti/exact.hpp"

namespace powerbetti {

// Univariate polynomial with exact rational coefficients, lowest degree
// first. The zero polynomial has degree kMinusInfinity.
class RationalPolynomial {
 public:
  static constexpr int kMinusInfinity = INT_MIN;

  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  static RationalPolynomial constant(const Rational& c);
  // c * x^d
  static RationalPolynomial monomial(const Rational& c, int d);

  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  int degree() const noexcept;
  bool is_zero() const noexcept { return c_.empty(); }
  // Coefficient of x^d (zero outside the stored range).
  Rational coefficient(int d) const;
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& x) const;
  RationalPolynomial derivative() const;
  // Same roots, leading coefficient one. Requires a nonzero polynomial.
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.c_ == b.c_;
  }

  // Human-readable form in the given variable, e.g. "3k^2+4k-7".
  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

// Square-free decomposition (Yun): p = c * prod_i f_i^{m_i} with the f_i
// monic, square-free and pairwise coprime. Constant factors are dropped.
std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p);

// Unique polynomial of degree < points.size() through the given (x, y) pairs
// (Newton divided differences). The x values must be distinct.
RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace powerbetti

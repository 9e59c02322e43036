#include <optional>

#include "powerbetti/spectra.hpp"

namespace powerbetti {
namespace {

// Rescale by a positive rational so the coefficients are coprime integers.
// Signs are preserved, which is all a Sturm chain needs.
RationalPolynomial primitive(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt den = 1, num = 0;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  return scale * p;
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{primitive(p), primitive(p.derivative())};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(primitive(Rational(-1) * r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_at(const RationalPolynomial& q, const std::optional<Rational>& x, bool at_minus_infinity) {
  if (x) return sgn(q.evaluate(*x));
  const int s = sgn(q.leading_coefficient());
  return (at_minus_infinity && q.degree() % 2 == 1) ? -s : s;
}

int variations(const std::vector<RationalPolynomial>& chain, const std::optional<Rational>& x,
               bool at_minus_infinity) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, x, at_minus_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int distinct_in(const RationalPolynomial& p, const RealInterval& interval) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(divmod(p, gcd(p, p.derivative())).first);
  return variations(chain, interval.lo, true) - variations(chain, interval.hi, false);
}

}  // namespace

RealRootCount sturm_real_root_count(const RationalPolynomial& p, const RealInterval& interval) {
  if (p.is_zero()) throw DomainError("the zero polynomial has infinitely many roots");
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return {};
  RealRootCount out;
  out.distinct = distinct_in(p, interval);
  // A root of multiplicity m divides g_0 = p, g_1 = gcd(g_0, g_0'), ...,
  // g_{m-1}, so summing distinct counts along the chain gives multiplicities.
  RationalPolynomial g = p;
  while (g.degree() >= 1) {
    out.with_multiplicity += distinct_in(g, interval);
    g = gcd(g, g.derivative());
  }
  return out;
}

}  // namespace powerbetti

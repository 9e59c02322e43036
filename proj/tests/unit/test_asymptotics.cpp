#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "powerbetti/asymptotics.hpp"
#include "powerbetti/errors.hpp"

using namespace powerbetti;
using testing::load;

namespace {

RationalPolynomial poly(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::vector<BigInt> big(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

KodiyalamProfile profile_of(const MonomialIdeal& I, int kmax, const CoefficientField& F = CoefficientField::rational()) {
  const auto outcome = kodiyalam_profile(betti_series(I, kmax, F));
  REQUIRE(std::holds_alternative<KodiyalamProfile>(outcome));
  return std::get<KodiyalamProfile>(outcome);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto p = poly({q(-7), q(4), q(3)});
  CHECK(p.degree() == 2);
  CHECK(p.to_string("k") == "3k^2+4k-7");
  CHECK(poly({q(1), q(3, 2), q(1, 2)}).to_string("k") == "1/2*k^2+3/2*k+1");
  CHECK(RationalPolynomial().degree() == RationalPolynomial::kMinusInfinity);
  CHECK(RationalPolynomial().to_string() == "0");
  CHECK(p.evaluate(q(1)) == 0);
  CHECK(p.derivative() == poly({q(4), q(6)}));
  const auto [quot, rem] = divmod(p, poly({q(-1), q(1)}));
  CHECK(quot == poly({q(7), q(3)}));
  CHECK(rem.is_zero());
  CHECK(gcd(poly({q(1), q(2), q(1)}), poly({q(1), q(1)})) == poly({q(1), q(1)}));
}

TEST_CASE("interpolation reproduces its nodes") {
  std::vector<std::pair<Rational, Rational>> pts{{q(1), q(0)}, {q(2), q(13)}, {q(3), q(32)}};
  CHECK(interpolate(pts) == poly({q(-7), q(4), q(3)}));
}

TEST_CASE("square-free decomposition") {
  // (t+1)^3 (t^2+1) t
  auto p = poly({q(1), q(1)});
  p = p * p * p * poly({q(1), q(0), q(1)}) * poly({q(0), q(1)});
  const auto parts = squarefree_decomposition(p);
  RationalPolynomial rebuilt = RationalPolynomial::constant(1);
  int simple_degree = 0;
  for (const auto& [f, m] : parts) {
    for (int i = 0; i < m; ++i) rebuilt = rebuilt * f;
    if (m == 1) simple_degree = f.degree();
    if (m == 3) CHECK(f == poly({q(1), q(1)}));
  }
  CHECK(rebuilt == p.monic());
  CHECK(simple_degree == 3);
}

TEST_CASE("betti_series examples") {
  const auto m = betti_series(parse_ideal("vars: x y; gens: x, y"), 3, CoefficientField::rational());
  CHECK(m.row(1) == big({1, 2, 1}));
  CHECK(m.row(2) == big({1, 3, 2}));
  CHECK(m.row(3) == big({1, 4, 3}));
  const auto x = betti_series(parse_ideal("vars: x; gens: x"), 5, CoefficientField::rational());
  for (int k = 1; k <= 5; ++k) CHECK(x.row(k) == big({1, 1}));
  const auto t = betti_series(load("thirdexample.ideal"), 1, CoefficientField::rational());
  CHECK(t.row(1) == big({1, 3, 3, 1, 0, 0}));
  CHECK_THROWS_AS(betti_series(parse_ideal("vars: x; gens: x"), 0, CoefficientField::rational()), DomainError);
}

TEST_CASE("resource errors name the offending power") {
  ResolutionLimits tiny;
  tiny.max_lattice_size = 20;
  try {
    betti_series(load("secondexample.ideal"), 4, CoefficientField::rational(), tiny);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("at k=") != std::string::npos);
  }
}

TEST_CASE("fit_polynomial examples") {
  std::vector<std::pair<long, BigInt>> affine{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  const auto a = fit_polynomial(affine, 1, 2);
  REQUIRE(std::holds_alternative<PolynomialFit>(a));
  CHECK(std::get<PolynomialFit>(a).poly == poly({q(1), q(1)}));
  CHECK(std::get<PolynomialFit>(a).threshold == 1);

  std::vector<std::pair<long, BigInt>> ones;
  for (long k = 1; k <= 8; ++k) ones.emplace_back(k, 1);
  const auto b = fit_polynomial(ones, 5, 3);
  REQUIRE(std::holds_alternative<PolynomialFit>(b));
  CHECK(std::get<PolynomialFit>(b).poly == RationalPolynomial::constant(1));

  // 3k^2+4k-7 from k = 2 on, something else at k = 1.
  std::vector<std::pair<long, BigInt>> late{{1, 7}};
  for (long k = 2; k <= 9; ++k) late.emplace_back(k, 3 * k * k + 4 * k - 7);
  const auto c = fit_polynomial(late, 5, 3);
  REQUIRE(std::holds_alternative<PolynomialFit>(c));
  CHECK(std::get<PolynomialFit>(c).poly == poly({q(-7), q(4), q(3)}));
  CHECK(std::get<PolynomialFit>(c).threshold == 2);
}

TEST_CASE("fit_polynomial reports too few points") {
  std::vector<std::pair<long, BigInt>> cubic;
  for (long k = 1; k <= 5; ++k) cubic.emplace_back(k, k * k * k);
  CHECK(std::holds_alternative<NotStabilized>(fit_polynomial(cubic, 3, 3)));
  CHECK_THROWS_AS(fit_polynomial(cubic, 3, 0), DomainError);
}

TEST_CASE("profile of the second example") {
  const auto p = profile_of(load("secondexample.ideal"), 8);
  CHECK(p.polynomials[1] == poly({q(-7), q(4), q(3)}));
  CHECK(p.polynomials[2] == poly({q(-7), q(3), q(6)}));
  CHECK(p.polynomials[3] == poly({q(5), q(-1), q(3)}));
  CHECK(p.polynomials[4] == RationalPolynomial::constant(5));
  CHECK(p.polynomials[5] == RationalPolynomial::constant(1));
  CHECK(p.polynomials[6].is_zero());
  CHECK(p.apd == 5);
  CHECK(p.ell == 3);
  CHECK(p.bigK == 3);
  CHECK(p.multiplicities == big({6, 12, 6}));
  // P_1(1) = 0 while beta_1(S/I) = 7: the threshold is above 1.
  CHECK(p.k0 > 1);
}

TEST_CASE("profile of the third example") {
  const auto p = profile_of(load("thirdexample.ideal"), 9);
  CHECK(p.polynomials[1] == poly({q(1), q(3, 2), q(1, 2)}));
  CHECK(p.polynomials[2] == poly({q(0), q(2), q(1)}));
  CHECK(p.polynomials[3] == poly({q(0), q(1, 2), q(1, 2)}));
  CHECK(p.multiplicities == big({1, 2, 1}));
  CHECK(p.apd == 3);
  CHECK(p.ell == 3);
}

TEST_CASE("profile of the maximal ideal in two variables") {
  const auto p = profile_of(parse_ideal("vars: x y; gens: x, y"), 8);
  CHECK(p.polynomials[1] == poly({q(1), q(1)}));
  CHECK(p.polynomials[2] == poly({q(0), q(1)}));
  CHECK(p.apd == 2);
  CHECK(p.ell == 2);
  CHECK(p.bigK == 2);
  CHECK(p.multiplicities == big({1, 1}));
}

TEST_CASE("too short a series does not stabilize") {
  const auto s = betti_series(load("secondexample.ideal"), 4, CoefficientField::rational());
  const auto outcome = kodiyalam_profile(s);
  REQUIRE(std::holds_alternative<NotStabilized>(outcome));
  CHECK_FALSE(std::get<NotStabilized>(outcome).failed_columns.empty());
}

TEST_CASE("closed form for regular sequences") {
  CHECK(closed_form_regular_sequence(2, 3) == big({1, 4, 3}));
  CHECK(closed_form_regular_sequence(3, 1) == big({1, 3, 3, 1}));
  const auto r20 = closed_form_regular_sequence(20, 1);
  for (long i = 0; i <= 20; ++i) CHECK(r20[static_cast<std::size_t>(i)] == oracle::choose(20, 20 - i));
  for (long n = 1; n <= 8; ++n) {
    for (long k = 1; k <= 8; ++k) {
      const auto got = closed_form_regular_sequence(static_cast<int>(n), static_cast<int>(k));
      const auto want = oracle::eagon_northcott(n, k);
      for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
    }
  }
}

TEST_CASE("engine matches the closed form on pure-power regular sequences") {
  for (const char* text : {"vars: x y; gens: x, y", "vars: x y; gens: x^2, y^3", "vars: x y z; gens: x, y, z",
                           "vars: x y z; gens: x^2, y^3, z^4"}) {
    const auto I = parse_ideal(text);
    const long n = static_cast<long>(I.num_variables());
    const auto s = betti_series(I, 6, CoefficientField::rational());
    for (int k = 1; k <= 6; ++k) {
      const auto want = oracle::eagon_northcott(n, k);
      CAPTURE(text);
      CAPTURE(k);
      for (std::size_t i = 0; i < want.size(); ++i) CHECK(s.row(k)[i] == want[i]);
    }
  }
}

TEST_CASE("profile invariants on every fixture") {
  for (const auto& name : testing::profiled_fixture_names()) {
    const auto I = load(name);
    const int n = static_cast<int>(I.num_variables());
    const auto series = betti_series(I, n + 6, CoefficientField::rational());
    const auto outcome = kodiyalam_profile(series);
    CAPTURE(name);
    REQUIRE(std::holds_alternative<KodiyalamProfile>(outcome));
    const auto& p = std::get<KodiyalamProfile>(outcome);
    CHECK(p.polynomials[0] == RationalPolynomial::constant(1));
    for (std::size_t i = 2; i < p.polynomials.size(); ++i) {
      if (!p.polynomials[i].is_zero()) CHECK(p.degree(i) <= p.degree(i - 1));
    }
    for (const auto& k : p.multiplicities) CHECK(k > 0);
    if (p.ell >= 2) {
      BigInt alt = 0;
      for (int i = 1; i <= p.bigK; ++i) alt += (i % 2 ? -1 : 1) * p.multiplicity(i);
      CHECK(alt == 0);
    }
    if (is_artinian(I)) {
      CHECK(p.bigK == n);
      for (int i = 1; i <= n; ++i) CHECK(p.degree(static_cast<std::size_t>(i)) == n - 1);
    }
    // k_i / k_1 is the limit of beta_i / beta_1.
    const int kmax = series.kmax();
    for (int i = 1; i <= p.bigK; ++i) {
      const double ratio = mpq_class(series.row(kmax)[static_cast<std::size_t>(i)], series.row(kmax)[1]).get_d();
      const double limit = mpq_class(p.multiplicity(i), p.multiplicity(1)).get_d();
      CHECK(std::abs(ratio - limit) <= 10.0 / kmax);
    }
    CHECK_NOTHROW(validate_profile(p));
  }
}

TEST_CASE("profiles are stable between Q and F_2 on the fixtures") {
  // A divergence here would be a characteristic-dependence finding, not a bug.
  int divergent = 0;
  for (const auto& name : testing::profiled_fixture_names()) {
    const auto I = load(name);
    const int kmax = static_cast<int>(I.num_variables()) + 6;
    const auto a = kodiyalam_profile(betti_series(I, kmax, CoefficientField::rational()));
    const auto b = kodiyalam_profile(betti_series(I, kmax, CoefficientField::prime(2)));
    if (std::holds_alternative<KodiyalamProfile>(a) && std::holds_alternative<KodiyalamProfile>(b) &&
        std::get<KodiyalamProfile>(a).polynomials != std::get<KodiyalamProfile>(b).polynomials) {
      MESSAGE("profile differs between Q and GF(2) for " << name);
      ++divergent;
    }
  }
  CHECK(divergent >= 0);
}

TEST_CASE("validate_profile rejects broken profiles") {
  auto p = profile_of(parse_ideal("vars: x y; gens: x, y"), 8);
  auto bad = p;
  bad.multiplicities[1] = 2;
  CHECK_THROWS_AS(validate_profile(bad), InvariantViolation);
  bad = p;
  bad.polynomials[2] = poly({q(0), q(0), q(1)});
  try {
    validate_profile(bad);
    FAIL("expected a violation");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "degree_chain");
  }
  bad = p;
  bad.polynomials[2] = poly({q(0), q(1, 2)});
  bad.polynomials[1] = poly({q(1), q(1, 2)});
  CHECK_THROWS_AS(validate_profile(bad), InvariantViolation);
}

TEST_CASE("profile JSON round trip and series CSV") {
  const auto p = profile_of(load("thirdexample.ideal"), 9);
  const auto j = profile_to_json(p);
  CHECK(j.at("status") == "stabilized");
  CHECK(j.at("polynomials")[1] == json::array({"1", "3/2", "1/2"}));
  const auto back = profile_from_json(json::parse(j.dump()));
  CHECK(back.polynomials == p.polynomials);
  CHECK(back.multiplicities == p.multiplicities);
  CHECK(back.k0 == p.k0);

  std::ostringstream csv;
  write_series_csv(csv, betti_series(parse_ideal("vars: x y; gens: x, y"), 2, CoefficientField::rational()));
  CHECK(csv.str() == "k,beta_0,beta_1,beta_2\n1,1,2,1\n2,1,3,2\n");
}

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "powerbetti/spectra.hpp"

using namespace powerbetti;
using testing::load;

namespace {

RationalPolynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(std::move(v));
}

KodiyalamProfile profile_of(const MonomialIdeal& I, int kmax) {
  const auto outcome = kodiyalam_profile(betti_series(I, kmax, CoefficientField::rational()));
  REQUIRE(std::holds_alternative<KodiyalamProfile>(outcome));
  return std::get<KodiyalamProfile>(outcome);
}

KodiyalamProfile fixture_profile(const std::string& name) {
  const auto I = load(name);
  return profile_of(I, static_cast<int>(I.num_variables()) + 6);
}

KodiyalamProfile maximal_ideal_profile(int n) {
  const auto outcome = kodiyalam_profile(regular_sequence_series(n, n + 4));
  REQUIRE(std::holds_alternative<KodiyalamProfile>(outcome));
  return std::get<KodiyalamProfile>(outcome);
}

bool is_real(Complex z) { return std::abs(z.imag()) <= 1e-8 * std::max(1.0, std::abs(z)); }

int count_real(const std::vector<Complex>& roots) {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), is_real));
}

}  // namespace

TEST_CASE("betti_polynomial_at examples") {
  const auto m = fixture_profile("x_y.ideal");
  CHECK(betti_polynomial_at(m, 2) == poly({2, 3, 1}));
  const auto t = fixture_profile("thirdexample.ideal");
  CHECK(betti_polynomial_at(t, 2) == poly({3, 8, 6, 1}));
  const auto s = fixture_profile("secondexample.ideal");
  CHECK_THROWS_AS(betti_polynomial_at(s, 1), DomainError);
  CHECK_NOTHROW(betti_polynomial_at(s, 1, true));
}

TEST_CASE("betti polynomial coefficients are the Betti numbers beyond the threshold") {
  for (const auto& name : testing::profiled_fixture_names()) {
    const auto I = load(name);
    const int kmax = static_cast<int>(I.num_variables()) + 6;
    const auto series = betti_series(I, kmax, CoefficientField::rational());
    const auto p = std::get<KodiyalamProfile>(kodiyalam_profile(series));
    for (long k = p.k0; k <= kmax; ++k) {
      const auto b = betti_polynomial_at(p, k);
      CAPTURE(name);
      CAPTURE(k);
      CHECK(b.degree() == p.apd);
      for (int i = 0; i <= p.apd; ++i) CHECK(b.coefficient(p.apd - i) == Rational(series.row(static_cast<int>(k))[static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("find_roots on small polynomials") {
  const auto a = find_roots(poly({2, 3, 1}));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == Complex(-2, 0));
  CHECK(a[1] == Complex(-1, 0));

  // Quadratic formula: (-5 +- sqrt(13)) / 2.
  const auto b = find_roots(poly({3, 5, 1}));
  REQUIRE(b.size() == 2);
  CHECK(b[0].real() == doctest::Approx((-5 - std::sqrt(13.0)) / 2).epsilon(1e-12));
  CHECK(b[1].real() == doctest::Approx((-5 + std::sqrt(13.0)) / 2).epsilon(1e-12));
  CHECK(b[0].imag() == 0);

  const auto c = find_roots(poly({1, 0, 1}));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::conj(c[1]));
  CHECK(std::abs(std::abs(c[0].imag()) - 1) < 1e-12);

  // (t+1)^3 t^2: multiple roots come back exact.
  const auto d = find_roots(poly({0, 0, 1, 3, 3, 1}));
  REQUIRE(d.size() == 5);
  CHECK(std::count(d.begin(), d.end(), Complex(-1, 0)) == 3);
  CHECK(std::count(d.begin(), d.end(), Complex(0, 0)) == 2);

  CHECK_THROWS_AS(find_roots(poly({4})), DomainError);
}

TEST_CASE("find_roots reports non-convergence with its best iterate") {
  RootFinderOptions opts;
  opts.max_iterations = 1;
  try {
    find_roots(poly({-1, 2, -3, 5, 7, -11, 13, 1, 17}), opts);
    FAIL("expected RootFindingError");
  } catch (const RootFindingError& e) {
    CHECK(e.best_iterate().size() == 8);
  }
}

TEST_CASE("random polynomials: residuals, conjugates and Sturm agree with the root finder") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    RationalPolynomial p(std::move(c));
    // Every fourth trial gets a repeated linear factor.
    if (trial % 4 == 0) {
      const auto f = poly({coeff(rng), 1});
      p = p * f * f;
    }
    const auto roots = find_roots(p);
    CAPTURE(p.to_string("t"));
    REQUIRE(static_cast<int>(roots.size()) == p.degree());
    for (const auto& z : roots) {
      CHECK(relative_residual(p, z) <= 1e-10);
      if (z.imag() != 0) CHECK(std::find(roots.begin(), roots.end(), std::conj(z)) != roots.end());
    }
    CHECK(sturm_real_root_count(p).with_multiplicity == count_real(roots));
  }
}

TEST_CASE("sturm_real_root_count examples") {
  CHECK(sturm_real_root_count(poly({-2, 0, 1})).distinct == 2);
  CHECK(sturm_real_root_count(poly({1, 0, 1})).distinct == 0);
  const auto sq = sturm_real_root_count(poly({1, -2, 1}));
  CHECK(sq.distinct == 1);
  CHECK(sq.with_multiplicity == 2);
  // t^3 - t on (0, 1] sees only 1.
  RealInterval half{Rational(0), Rational(1)};
  CHECK(sturm_real_root_count(poly({0, -1, 0, 1}), half).distinct == 1);
  RealInterval neg{std::nullopt, Rational(0)};
  CHECK(sturm_real_root_count(poly({0, -1, 0, 1}), neg).distinct == 2);
  CHECK_THROWS_AS(sturm_real_root_count(RationalPolynomial()), DomainError);
  CHECK(sturm_real_root_count(poly({0, 1}), {Rational(1), Rational(0)}).distinct == 0);
}

TEST_CASE("limit_polynomial examples") {
  CHECK(limit_polynomial(fixture_profile("x_y.ideal")) == poly({1, 1}));
  CHECK(limit_polynomial(fixture_profile("thirdexample.ideal")) == poly({1, 2, 1}));
  CHECK(limit_polynomial(fixture_profile("secondexample.ideal")) == poly({0, 0, 6, 12, 6}));
  CHECK_THROWS_AS(limit_polynomial(fixture_profile("principal.ideal")), DomainError);
}

TEST_CASE("-1 is an exact root of every Betti polynomial and of every limit polynomial") {
  for (const auto& name : testing::profiled_fixture_names()) {
    const auto p = fixture_profile(name);
    CAPTURE(name);
    for (long k = p.k0; k <= p.k0 + 8; ++k) CHECK(betti_polynomial_at(p, k).evaluate(Rational(-1)) == 0);
    if (p.ell >= 2) CHECK(limit_polynomial(p).evaluate(Rational(-1)) == 0);
  }
}

TEST_CASE("root locus of the maximal ideal in two variables") {
  // (t + 1)(t + k)
  const auto locus = root_locus(fixture_profile("x_y.ideal"), 1, 10);
  REQUIRE(locus.trajectory_count() == 2);
  for (long k = 1; k <= 10; ++k) {
    auto r = locus.at(k);
    std::sort(r.begin(), r.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(r[0] == Complex(static_cast<double>(-k), 0));
    CHECK(r[1] == Complex(-1, 0));
  }
  REQUIRE(locus.escape_trajectory.has_value());
  CHECK(locus.at(10)[*locus.escape_trajectory] == Complex(-10, 0));
  // At k = 1 the double root -1 has no escape root yet.
  CHECK_FALSE(locus.escape.front().has_value());
}

TEST_CASE("limit theorem for the maximal ideal in two variables") {
  const auto p = fixture_profile("x_y.ideal");
  const auto report = verify_limit_theorem(p, 1, 40);
  REQUIRE(report.bounded.size() == 1);
  CHECK(report.bounded[0].limit_root == Complex(-1, 0));
  CHECK(report.bounded[0].final_distance == 0.0);
  CHECK(report.bounded[0].trend == Trend::decreasing);
  CHECK(report.escape_real);
  CHECK(report.escape_divergence == Trend::decreasing);
  CHECK(report.limit_minus_one_is_root);
  for (bool b : report.minus_one_is_root) CHECK(b);
  CHECK(report.real_root_counts.front() == 1);
  for (std::size_t i = 1; i < report.real_root_counts.size(); ++i) CHECK(report.real_root_counts[i] == 2);
}

TEST_CASE("limit theorem on the fixtures with ell >= 2") {
  for (const auto& name : testing::profiled_fixture_names()) {
    const auto p = fixture_profile(name);
    if (p.ell < 2) continue;
    CAPTURE(name);
    const auto report = verify_limit_theorem(p, p.k0, p.k0 + 30);
    CHECK(report.escape_real);
    CHECK(report.escape_divergence == Trend::decreasing);
    CHECK(report.limit_minus_one_is_root);
    CHECK(report.bounded.size() == static_cast<std::size_t>(p.apd - 1));
    for (const auto& b : report.bounded) CHECK(b.trend != Trend::not_decreasing);
    for (bool b : report.minus_one_is_root) CHECK(b);
  }
}

TEST_CASE("maximal ideal in 20 variables: bounded roots approach the limit roots") {
  const auto p = maximal_ideal_profile(20);
  const auto report = verify_limit_theorem(p, 20, 40);
  CHECK(report.bounded.size() == 19);
  for (const auto& b : report.bounded) CHECK(b.trend == Trend::decreasing);
  CHECK(report.escape_real);
  CHECK(report.escape_divergence == Trend::decreasing);
  for (std::size_t i = 1; i < report.max_bounded_distance.size(); ++i) {
    CHECK(report.max_bounded_distance[i] < report.max_bounded_distance[i - 1]);
  }
  // Independent 60-digit evaluation (mpmath polyroots on the same polynomials).
  const std::vector<std::pair<long, double>> oracle{{20, 0.5576}, {25, 0.4607}, {30, 0.3927}, {35, 0.3422}, {40, 0.3033}};
  for (const auto& [k, d] : oracle) {
    CAPTURE(k);
    CHECK(report.max_bounded_distance[static_cast<std::size_t>(k - 20)] == doctest::Approx(d).epsilon(5e-4));
  }
  for (long k = 20; k <= 40; ++k) {
    const int c = numbered_real_root_count(p, k);
    CHECK((c == 2 || c == 3));
  }
}

TEST_CASE("numbered_real_root_count separates -1 from the escape root") {
  const auto p = fixture_profile("x_y.ideal");
  // (t+1)^2 at k = 1: the quotient keeps a root at -1.
  CHECK(numbered_real_root_count(p, 1) == 2);
  CHECK(numbered_real_root_count(p, 5) == 2);
  CHECK_THROWS_AS(numbered_real_root_count(fixture_profile("principal.ideal"), 3), DomainError);
}

TEST_CASE("locus CSV and SVG are deterministic") {
  const auto p = fixture_profile("thirdexample.ideal");
  std::ostringstream c1, c2, s1, s2;
  write_locus_csv(c1, root_locus(p, 1, 12));
  write_locus_csv(c2, root_locus(p, 1, 12));
  CHECK(c1.str() == c2.str());
  const std::string csv = c1.str();
  CHECK(csv.rfind("k,root_index,re,im,trajectory_id,is_escape\n", 0) == 0);
  // 12 values of k, 3 roots each.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 12 * 3);
  write_locus_svg(s1, root_locus(p, 1, 12));
  write_locus_svg(s2, root_locus(p, 1, 12));
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().find("<svg") != std::string::npos);
  CHECK(s1.str().find("</svg>") != std::string::npos);
}

TEST_CASE("limit report JSON carries the per-k data") {
  const auto report = verify_limit_theorem(fixture_profile("x_y.ideal"), 1, 5);
  const auto j = limit_report_to_json(report);
  CHECK(j.at("kmin") == 1);
  CHECK(j.at("kmax") == 5);
  CHECK(j.at("minus_one_is_root").size() == 5);
  CHECK(j.at("escape_divergence") == "decreasing");
  CHECK(j.at("bounded")[0].at("trend") == "decreasing");
}

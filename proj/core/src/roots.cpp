#include <algorithm>
#include <cmath>
#include <numbers>

#include "powerbetti/spectra.hpp"

namespace powerbetti {
namespace {

using LComplex = std::complex<long double>;

constexpr mp_bitcnt_t kPrecision = 256;

// Coefficients carried at kPrecision bits, lowest degree first.
using Coefficients = std::vector<mpf_class>;

struct Evaluation {
  LComplex newton;       // p(z) / p'(z)
  long double backward;  // |p(z)| / sum |a_i| |z|^i
};

mpf_class to_mpf(long double x) {
  const double hi = static_cast<double>(x);
  const double lo = static_cast<double>(x - static_cast<long double>(hi));
  mpf_class r(hi, kPrecision);
  r += lo;
  return r;
}

long double to_ld(const mpf_class& x) {
  const double hi = x.get_d();
  const mpf_class rest(x - hi, kPrecision);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

// Horner for p and p' in multiprecision. Long double alone is not enough:
// with positive coefficients and a root cluster, cancellation swamps the
// value of p in a whole disc around the cluster.
Evaluation evaluate(const Coefficients& a, LComplex z) {
  const std::size_t n = a.size() - 1;
  const mpf_class zr = to_mpf(z.real()), zi = to_mpf(z.imag());
  const mpf_class abs_z(sqrt(zr * zr + zi * zi), kPrecision);
  mpf_class pr(a[n], kPrecision), pi(0, kPrecision), dr(0, kPrecision), di(0, kPrecision);
  mpf_class scale(abs(a[n]), kPrecision), t(0, kPrecision);
  for (std::size_t i = n; i-- > 0;) {
    t = dr * zr - di * zi + pr;
    di = dr * zi + di * zr + pi;
    dr = t;
    t = pr * zr - pi * zi + a[i];
    pi = pr * zi + pi * zr;
    pr = t;
    scale = scale * abs_z + abs(a[i]);
  }
  Evaluation ev{LComplex(0), 0.0L};
  const mpf_class norm_p = sqrt(pr * pr + pi * pi);
  if (scale != 0) ev.backward = to_ld(mpf_class(norm_p / scale, kPrecision));
  const mpf_class den = dr * dr + di * di;
  if (den != 0) {
    const mpf_class nr = (pr * dr + pi * di) / den;
    const mpf_class ni = (pi * dr - pr * di) / den;
    ev.newton = LComplex(to_ld(nr), to_ld(ni));
  }
  return ev;
}

// Initial approximations on circles whose radii come from the upper convex
// hull of (i, log|a_i|) (the Newton polygon).
std::vector<LComplex> initial_guesses(const Coefficients& a) {
  const std::size_t n = a.size() - 1;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != 0) {
      long exp2 = 0;
      const double mant = mpf_get_d_2exp(&exp2, a[i].get_mpf_t());
      pts.emplace_back(static_cast<double>(i), std::log(std::abs(mant)) + static_cast<double>(exp2) * std::log(2.0));
    }
  }
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = (b.first - o.first) * (p.second - o.second) - (b.second - o.second) * (p.first - o.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<LComplex> z;
  z.reserve(n);
  const double two_pi = 2.0 * std::numbers::pi;
  const double sigma = 0.7;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const double width = hull[e + 1].first - hull[e].first;
    const double radius = std::exp((hull[e].second - hull[e + 1].second) / width);
    const auto count = static_cast<std::size_t>(width);
    for (std::size_t q = 0; q < count; ++q) {
      const double angle = two_pi * static_cast<double>(q) / width + two_pi * static_cast<double>(e) / static_cast<double>(n) + sigma;
      z.emplace_back(std::polar(static_cast<long double>(radius), static_cast<long double>(angle)));
    }
  }
  return z;
}

std::vector<Complex> aberth(const Coefficients& a, const RootFinderOptions& options) {
  const std::size_t n = a.size() - 1;
  std::vector<LComplex> z = initial_guesses(a);
  std::vector<bool> done(n, false);
  // Only an (almost) exact hit counts without a small step.
  const long double floor = 1e-60L;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      const Evaluation ev = evaluate(a, z[j]);
      if (ev.backward <= floor) {
        done[j] = true;
        continue;
      }
      LComplex sum = 0;
      for (std::size_t l = 0; l < n; ++l) {
        if (l != j) sum += LComplex(1) / (z[j] - z[l]);
      }
      const LComplex w = ev.newton / (LComplex(1) - ev.newton * sum);
      z[j] -= w;
      if (std::abs(w) <= static_cast<long double>(options.step_tolerance) * std::max(std::abs(z[j]), 1e-300L)) {
        done[j] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) {
      std::vector<Complex> out;
      for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
      return out;
    }
  }
  std::vector<Complex> best;
  long double worst = 0;
  for (const auto& r : z) {
    best.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    worst = std::max(worst, evaluate(a, r).backward);
  }
  throw RootFindingError("root finder did not converge in " + std::to_string(options.max_iterations) +
                             " iterations",
                         std::move(best), static_cast<double>(worst));
}

// Real roots get a zero imaginary part; the rest are paired with their
// nearest conjugate and replaced by the pair average.
void enforce_conjugate_symmetry(std::vector<Complex>& roots, double real_tolerance) {
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto& z = roots[i];
    if (std::abs(z.imag()) <= real_tolerance * std::max(1.0, std::abs(z))) {
      z = {z.real(), 0.0};
    } else {
      (z.imag() > 0 ? upper : lower).push_back(i);
    }
  }
  std::vector<bool> used(lower.size(), false);
  for (std::size_t u : upper) {
    std::size_t best = lower.size();
    double best_d = 0;
    for (std::size_t l = 0; l < lower.size(); ++l) {
      if (used[l]) continue;
      const double d = std::abs(roots[u] - std::conj(roots[lower[l]]));
      if (best == lower.size() || d < best_d) {
        best = l;
        best_d = d;
      }
    }
    if (best == lower.size()) continue;
    used[best] = true;
    const Complex avg = 0.5 * (roots[u] + std::conj(roots[lower[best]]));
    roots[u] = avg;
    roots[lower[best]] = std::conj(avg);
  }
}

Coefficients coefficients_mpf(const RationalPolynomial& p) {
  Coefficients a;
  for (const auto& c : p.coefficients()) a.emplace_back(c, kPrecision);
  return a;
}

}  // namespace

double relative_residual(const RationalPolynomial& p, Complex z) {
  if (p.is_zero()) return 0.0;
  const auto a = coefficients_mpf(p);
  if (a.size() == 1) return 1.0;
  return static_cast<double>(evaluate(a, LComplex(z.real(), z.imag())).backward);
}

std::vector<Complex> find_roots(const RationalPolynomial& p, const RootFinderOptions& options) {
  if (p.degree() < 1) throw DomainError("find_roots needs a polynomial of degree >= 1");

  // Multiple roots are split off exactly first, so the iteration only ever
  // sees simple roots and a k-fold root comes back as k identical values.
  std::vector<Complex> roots;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    std::size_t zeros = 0;
    while (factor.coefficients()[zeros] == 0) ++zeros;
    std::vector<Rational> rest(factor.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                               factor.coefficients().end());
    const RationalPolynomial reduced(std::move(rest));

    std::vector<Complex> simple(zeros, Complex(0.0, 0.0));
    if (reduced.degree() == 1) {
      const Rational r = -reduced.coefficient(0) / reduced.coefficient(1);
      simple.emplace_back(r.get_d(), 0.0);
    } else if (reduced.degree() > 1) {
      auto found = aberth(coefficients_mpf(reduced), options);
      enforce_conjugate_symmetry(found, options.real_tolerance);
      simple.insert(simple.end(), found.begin(), found.end());
    }
    for (int m = 0; m < multiplicity; ++m) roots.insert(roots.end(), simple.begin(), simple.end());
  }

  double worst = 0.0;
  for (const auto& z : roots) worst = std::max(worst, relative_residual(p, z));
  if (worst > 1e-10) {
    throw RootFindingError("root residual " + std::to_string(worst) + " above 1e-10", roots, worst);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

}  // namespace powerbetti

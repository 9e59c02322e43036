#include "powerbetti/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <tuple>

namespace powerbetti {
namespace {

// Greedy assignment of `next` onto the slots of `prev` by increasing distance.
std::vector<Complex> match_to(const std::vector<Complex>& prev, const std::vector<Complex>& next) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(prev.size() * next.size());
  for (std::size_t i = 0; i < prev.size(); ++i) {
    for (std::size_t j = 0; j < next.size(); ++j) pairs.emplace_back(std::abs(prev[i] - next[j]), i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Complex> out(prev.size());
  std::vector<bool> slot_used(prev.size(), false), root_used(next.size(), false);
  for (const auto& [d, i, j] : pairs) {
    if (slot_used[i] || root_used[j]) continue;
    slot_used[i] = root_used[j] = true;
    out[i] = next[j];
  }
  return out;
}

std::optional<std::size_t> find_escape(const std::vector<Complex>& roots) {
  if (roots.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i]) > std::abs(roots[best])) best = i;
  }
  if (roots[best].imag() != 0.0) return std::nullopt;
  const double r = std::abs(roots[best]);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i != best && !(r > 2.0 * std::abs(roots[i]))) return std::nullopt;
  }
  return best;
}

const RationalPolynomial& t_plus_one() {
  static const RationalPolynomial p(std::vector<Rational>{1, 1});
  return p;
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

}  // namespace

RationalPolynomial betti_polynomial_at(const KodiyalamProfile& profile, long k, bool allow_below_threshold) {
  if (!allow_below_threshold && k < profile.k0) {
    throw DomainError("k=" + std::to_string(k) + " is below the stabilization threshold k0=" +
                      std::to_string(profile.k0));
  }
  std::vector<Rational> c(static_cast<std::size_t>(profile.apd) + 1, 0);
  const Rational kk(k);
  for (int i = 0; i <= profile.apd; ++i) {
    c[static_cast<std::size_t>(profile.apd - i)] = profile.polynomials.at(static_cast<std::size_t>(i)).evaluate(kk);
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial limit_polynomial(const KodiyalamProfile& profile) {
  if (profile.ell < 2) throw DomainError("the limit polynomial needs ell >= 2");
  std::vector<Rational> c(static_cast<std::size_t>(profile.apd), 0);
  for (int i = 1; i <= profile.bigK; ++i) {
    c[static_cast<std::size_t>(profile.apd - i)] = Rational(profile.multiplicity(i));
  }
  RationalPolynomial f(std::move(c));
  if (f.evaluate(Rational(-1)) != 0) {
    throw InvariantViolation("alternating_multiplicities", "the limit polynomial does not vanish at -1");
  }
  return f;
}

RootLocus root_locus(const KodiyalamProfile& profile, long kmin, long kmax, const RootFinderOptions& options) {
  if (kmin < 1 || kmax < kmin) throw DomainError("root locus needs 1 <= kmin <= kmax");
  if (profile.apd < 1) throw DomainError("P(I)(k, t) has degree 0 in t");
  RootLocus locus;
  locus.kmin = kmin;
  locus.kmax = kmax;
  for (long k = kmin; k <= kmax; ++k) {
    auto roots = find_roots(betti_polynomial_at(profile, k, true), options);
    if (!locus.roots.empty()) roots = match_to(locus.roots.back(), roots);
    locus.escape.push_back(find_escape(roots));
    locus.roots.push_back(std::move(roots));
  }
  locus.escape_trajectory = locus.escape.back();
  return locus;
}

int numbered_real_root_count(const KodiyalamProfile& profile, long k) {
  if (profile.ell < 2) throw DomainError("the numbered real-root count needs ell >= 2");
  const auto p = betti_polynomial_at(profile, k, true);
  auto [q, r] = divmod(p, t_plus_one());
  if (!r.is_zero()) throw InvariantViolation("minus_one_root", "P(I)(k, -1) != 0 at k=" + std::to_string(k));
  if (q.degree() < 1) return 1;
  return 1 + sturm_real_root_count(q).distinct;
}

LimitTheoremReport verify_limit_theorem(const KodiyalamProfile& profile, long kmin, long kmax,
                                        const RootFinderOptions& options) {
  return verify_limit_theorem(profile, root_locus(profile, kmin, kmax, options));
}

LimitTheoremReport verify_limit_theorem(const KodiyalamProfile& profile, const RootLocus& locus) {
  const RationalPolynomial f = limit_polynomial(profile);
  LimitTheoremReport report;
  report.kmin = locus.kmin;
  report.kmax = locus.kmax;
  report.limit_minus_one_is_root = f.evaluate(Rational(-1)) == 0;

  for (long k = locus.kmin; k <= locus.kmax; ++k) {
    const auto p = betti_polynomial_at(profile, k, true);
    report.minus_one_is_root.push_back(p.evaluate(Rational(-1)) == 0);
    report.real_root_counts.push_back(sturm_real_root_count(p).distinct);
  }

  const auto& last = locus.roots.back();
  std::size_t escape = 0;
  if (locus.escape_trajectory) {
    escape = *locus.escape_trajectory;
  } else {
    for (std::size_t i = 1; i < last.size(); ++i) {
      if (std::abs(last[i]) > std::abs(last[escape])) escape = i;
    }
  }
  report.escape_trajectory = locus.escape_trajectory;
  report.escape_real = last[escape].imag() == 0.0;

  // Bounded trajectories at kmax against the roots of f.
  std::vector<Complex> bounded_last;
  std::vector<std::size_t> bounded_ids;
  for (std::size_t i = 0; i < last.size(); ++i) {
    if (i == escape) continue;
    bounded_last.push_back(last[i]);
    bounded_ids.push_back(i);
  }
  const auto alpha = match_to(bounded_last, find_roots(f));

  const std::size_t steps = locus.roots.size();
  const std::size_t tail_start = steps / 2;
  const bool enough = steps - tail_start >= 3;
  constexpr double kNoise = 1e-9;

  report.max_bounded_distance.assign(steps, 0.0);
  for (std::size_t b = 0; b < bounded_ids.size(); ++b) {
    BoundedTrajectoryReport tr;
    tr.trajectory = bounded_ids[b];
    tr.limit_root = alpha[b];
    std::vector<double> dist(steps);
    for (std::size_t s = 0; s < steps; ++s) {
      dist[s] = std::abs(locus.roots[s][tr.trajectory] - tr.limit_root);
      report.max_bounded_distance[s] = std::max(report.max_bounded_distance[s], dist[s]);
    }
    tr.final_distance = dist.back();
    if (!enough) {
      tr.trend = Trend::inconclusive;
    } else {
      tr.trend = Trend::decreasing;
      for (std::size_t s = tail_start + 1; s < steps; ++s) {
        if (dist[s] > dist[s - 1] + kNoise) tr.trend = Trend::not_decreasing;
      }
    }
    report.bounded.push_back(tr);
  }

  if (!enough) {
    report.escape_divergence = Trend::inconclusive;
  } else {
    report.escape_divergence = Trend::decreasing;
    for (std::size_t s = tail_start + 1; s < steps; ++s) {
      if (!(locus.roots[s][escape].real() < locus.roots[s - 1][escape].real())) {
        report.escape_divergence = Trend::not_decreasing;
      }
    }
  }
  return report;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::decreasing: return "decreasing";
    case Trend::not_decreasing: return "not_decreasing";
    case Trend::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

json limit_report_to_json(const LimitTheoremReport& r) {
  json bounded = json::array();
  for (const auto& b : r.bounded) {
    bounded.push_back(json{{"trajectory", b.trajectory},
                           {"limit_root", json::array({b.limit_root.real(), b.limit_root.imag()})},
                           {"final_distance", b.final_distance},
                           {"trend", to_string(b.trend)}});
  }
  json escape = r.escape_trajectory ? json(*r.escape_trajectory) : json(nullptr);
  std::vector<bool> m1(r.minus_one_is_root.begin(), r.minus_one_is_root.end());
  return json{{"kmin", r.kmin},
              {"kmax", r.kmax},
              {"limit_minus_one_is_root", r.limit_minus_one_is_root},
              {"escape_trajectory", escape},
              {"escape_real", r.escape_real},
              {"escape_divergence", to_string(r.escape_divergence)},
              {"bounded", std::move(bounded)},
              {"minus_one_is_root", m1},
              {"real_root_counts", r.real_root_counts},
              {"max_bounded_distance", r.max_bounded_distance}};
}

void write_locus_csv(std::ostream& out, const RootLocus& locus) {
  out << "k,root_index,re,im,trajectory_id,is_escape\n";
  for (std::size_t s = 0; s < locus.roots.size(); ++s) {
    const long k = locus.kmin + static_cast<long>(s);
    // root_index follows the (re, im) order at this k.
    const auto& row = locus.roots[s];
    std::vector<std::size_t> order(row.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return row[a].real() != row[b].real() ? row[a].real() < row[b].real() : row[a].imag() < row[b].imag();
    });
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const std::size_t traj = order[idx];
      const bool esc = locus.escape[s] && *locus.escape[s] == traj;
      out << k << ',' << idx << ',' << format_double(row[traj].real()) << ','
          << format_double(row[traj].imag()) << ',' << traj << ',' << (esc ? 1 : 0) << '\n';
    }
  }
}

}  // namespace powerbetti

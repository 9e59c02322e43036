#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "powerbetti/asymptotics.hpp"
#include "powerbetti/errors.hpp"
#include "powerbetti/polynomial.hpp"

namespace powerbetti {

using Complex = std::complex<double>;

// P(I)(k, t) = sum_i P_i(I)(k) t^{apd-i}; monic of degree apd in t. Below the
// stabilization threshold the polynomial no longer describes the actual
// Betti numbers, so it is refused unless explicitly allowed.
RationalPolynomial betti_polynomial_at(const KodiyalamProfile& profile, long k,
                                       bool allow_below_threshold = false);

struct RootFinderOptions {
  int max_iterations = 1000;
  // Stop once every relative correction is below this.
  double step_tolerance = 1e-12;
  // Treat a root as real when |Im z| <= real_tolerance * max(1, |z|).
  double real_tolerance = 1e-8;
};

class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, std::vector<Complex> best, double residual)
      : Error(what), best_(std::move(best)), residual_(residual) {}
  const std::vector<Complex>& best_iterate() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }

 private:
  std::vector<Complex> best_;
  double residual_;
};

// Relative backward error |p(z)| / sum_i |c_i| |z|^i.
double relative_residual(const RationalPolynomial& p, Complex z);

// All deg p roots with multiplicity (Aberth-Ehrlich simultaneous iteration),
// sorted by (real, imaginary) part, conjugate pairs made exact.
std::vector<Complex> find_roots(const RationalPolynomial& p, const RootFinderOptions& options = {});

// f(t) = sum_{i=1..K} k_i t^{apd-i}, integer coefficients.
RationalPolynomial limit_polynomial(const KodiyalamProfile& profile);

struct RootLocus {
  long kmin = 1;
  long kmax = 1;
  // roots[k - kmin][trajectory id]
  std::vector<std::vector<Complex>> roots;
  // Per k, the trajectory holding the escaping real root, once one real root
  // has more than twice the modulus of every other root.
  std::vector<std::optional<std::size_t>> escape;
  // Trajectory carrying the escape root at kmax, if any.
  std::optional<std::size_t> escape_trajectory;

  const std::vector<Complex>& at(long k) const { return roots.at(static_cast<std::size_t>(k - kmin)); }
  std::size_t trajectory_count() const { return roots.empty() ? 0 : roots.front().size(); }
};

// Roots of P(I)(k, t) for k in [kmin, kmax], matched into trajectories by
// greedy nearest neighbour between consecutive k.
RootLocus root_locus(const KodiyalamProfile& profile, long kmin, long kmax,
                     const RootFinderOptions& options = {});

// Half-open interval (lo, hi]; nullopt means -inf / +inf.
struct RealInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

struct RealRootCount {
  // Distinct real roots in the interval.
  int distinct = 0;
  // Same roots counted with multiplicity.
  int with_multiplicity = 0;
};

// Exact Sturm-chain count on the square-free part of p.
RealRootCount sturm_real_root_count(const RationalPolynomial& p, const RealInterval& interval = {});

// Real roots of P(I)(k, t) in the numbering where the -1 root and the escape
// root are separate trajectories: 1 for the exact root -1 plus the distinct
// real roots of P(I)(k, t) / (t + 1). Requires ell >= 2.
int numbered_real_root_count(const KodiyalamProfile& profile, long k);

enum class Trend { decreasing, not_decreasing, inconclusive };

struct BoundedTrajectoryReport {
  std::size_t trajectory = 0;
  Complex limit_root;
  double final_distance = 0.0;
  Trend trend = Trend::inconclusive;
};

struct LimitTheoremReport {
  long kmin = 1;
  long kmax = 1;
  std::vector<BoundedTrajectoryReport> bounded;
  std::optional<std::size_t> escape_trajectory;
  bool escape_real = false;
  Trend escape_divergence = Trend::inconclusive;
  // Exact P(I)(k, -1) == 0 per k.
  std::vector<bool> minus_one_is_root;
  // Distinct real roots of P(I)(k, t) per k (Sturm).
  std::vector<int> real_root_counts;
  // max over bounded trajectories of |gamma - alpha| per k.
  std::vector<double> max_bounded_distance;
  bool limit_minus_one_is_root = false;
};

LimitTheoremReport verify_limit_theorem(const KodiyalamProfile& profile, long kmin, long kmax,
                                        const RootFinderOptions& options = {});
// Same, over an already computed locus.
LimitTheoremReport verify_limit_theorem(const KodiyalamProfile& profile, const RootLocus& locus);

std::string to_string(Trend t);
json limit_report_to_json(const LimitTheoremReport& report);

// CSV: k,root_index,re,im,trajectory_id,is_escape
void write_locus_csv(std::ostream& out, const RootLocus& locus);

struct SvgOptions {
  int width = 800;
  int height = 600;
  // Points with modulus above this are left out of the axis fit and drawing.
  double clip = 10.0;
  std::string title;
};

// Real axis horizontal, imaginary axis vertical, one polyline per trajectory.
void write_locus_svg(std::ostream& out, const RootLocus& locus, const SvgOptions& options = {});

}  // namespace powerbetti

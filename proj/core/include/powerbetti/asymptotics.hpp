#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "powerbetti/exact.hpp"
#include "powerbetti/monomial.hpp"
#include "powerbetti/polynomial.hpp"
#include "powerbetti/resolution.hpp"

namespace powerbetti {

using json = nlohmann::ordered_json;

// Total Betti numbers of S/I^k for k = 1..kmax.
struct BettiSeries {
  std::string ideal;
  CoefficientField field = CoefficientField::rational();
  std::size_t num_variables = 0;
  // rows[k-1] = (beta_0(S/I^k), ..., beta_n(S/I^k))
  std::vector<std::vector<BigInt>> rows;

  int kmax() const noexcept { return static_cast<int>(rows.size()); }
  const std::vector<BigInt>& row(int k) const { return rows.at(static_cast<std::size_t>(k - 1)); }
  // (k, beta_i(S/I^k)) for k = 1..kmax.
  std::vector<std::pair<long, BigInt>> column(std::size_t i) const;
};

// Progress callback for long series computations: (k, kmax).
using SeriesProgress = std::function<void(int, int)>;

BettiSeries betti_series(const MonomialIdeal& ideal, int kmax, const CoefficientField& field,
                         const ResolutionLimits& limits = {}, const SeriesProgress& progress = {});

// beta_i(S/I^k) for an ideal generated by a regular sequence of length n:
// beta_0 = 1, beta_i = C(k+n-1, n-i) * C(k-2+i, i-1).
std::vector<BigInt> closed_form_regular_sequence(int n, int k);

// Series from the closed form, in a ring with n variables.
BettiSeries regular_sequence_series(int n, int kmax);

// Reported, not thrown: stabilization cannot be decided from the data.
struct NotStabilized {
  std::vector<std::size_t> failed_columns;
  std::string reason;
};

struct PolynomialFit {
  RationalPolynomial poly;
  // Smallest k from which the polynomial matches every supplied value.
  long threshold = 0;
};

using FitOutcome = std::variant<PolynomialFit, NotStabilized>;

// Finds the lowest degree d <= max_degree whose interpolant through the last
// d+1 values also reproduces the `guard` values before them.
FitOutcome fit_polynomial(std::span<const std::pair<long, BigInt>> values, int max_degree, int guard);

struct KodiyalamProfile {
  std::string ideal;
  CoefficientField field = CoefficientField::rational();
  std::size_t num_variables = 0;
  // P_0 .. P_n in the variable k.
  std::vector<RationalPolynomial> polynomials;
  std::vector<long> column_thresholds;
  long k0 = 1;
  int apd = 0;
  int ell = 0;
  int bigK = 0;
  // k_1 .. k_bigK
  std::vector<BigInt> multiplicities;

  int degree(std::size_t i) const { return polynomials.at(i).degree(); }
  // k_i for 1 <= i <= bigK.
  const BigInt& multiplicity(int i) const { return multiplicities.at(static_cast<std::size_t>(i - 1)); }
};

using ProfileOutcome = std::variant<KodiyalamProfile, NotStabilized>;

// Fits every column with degree bound n-1 and derives apd, ell, K and the
// multiplicities. Throws InvariantViolation when the fitted data break the
// degree chain, integrality, or the alternating-sum identity.
ProfileOutcome kodiyalam_profile(const BettiSeries& series, int guard = 3);

// Checks every structural invariant of a profile; throws InvariantViolation.
void validate_profile(const KodiyalamProfile& profile);

void write_series_csv(std::ostream& out, const BettiSeries& series);

json profile_to_json(const KodiyalamProfile& profile);
KodiyalamProfile profile_from_json(const json& j);
json not_stabilized_to_json(const NotStabilized& ns);

}  // namespace powerbetti

#include "powerbetti/asymptotics.hpp"

#include <algorithm>

#include "powerbetti/errors.hpp"

namespace powerbetti {
namespace {

void check_euler(const std::vector<BigInt>& row, int k) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < row.size(); ++i) sum += (i % 2 == 0) ? row[i] : BigInt(-row[i]);
  if (sum != 0) {
    throw InvariantViolation("euler_characteristic",
                             "alternating Betti sum is " + sum.get_str() + " at k=" + std::to_string(k));
  }
}

}  // namespace

std::vector<std::pair<long, BigInt>> BettiSeries::column(std::size_t i) const {
  std::vector<std::pair<long, BigInt>> out;
  out.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) out.emplace_back(static_cast<long>(k + 1), rows[k].at(i));
  return out;
}

BettiSeries betti_series(const MonomialIdeal& ideal, int kmax, const CoefficientField& field,
                         const ResolutionLimits& limits, const SeriesProgress& progress) {
  if (kmax < 1) throw DomainError("kmax must be >= 1");
  BettiSeries series;
  series.ideal = ideal.to_string();
  series.field = field;
  series.num_variables = ideal.num_variables();
  for (int k = 1; k <= kmax; ++k) {
    if (progress) progress(k, kmax);
    BettiTable table;
    try {
      table = betti_table(power(ideal, k), field, limits);
    } catch (const ResourceError& e) {
      throw ResourceError(std::string(e.what()) + " at k=" + std::to_string(k));
    }
    std::vector<BigInt> row;
    row.reserve(table.totals.size());
    for (auto b : table.totals) row.emplace_back(static_cast<unsigned long>(b));
    check_euler(row, k);
    series.rows.push_back(std::move(row));
  }
  return series;
}

std::vector<BigInt> closed_form_regular_sequence(int n, int k) {
  if (n < 1 || k < 1) throw DomainError("closed form needs n >= 1 and k >= 1");
  std::vector<BigInt> beta(static_cast<std::size_t>(n) + 1);
  beta[0] = 1;
  for (int i = 1; i <= n; ++i) {
    beta[static_cast<std::size_t>(i)] =
        binomial(static_cast<std::uint64_t>(k + n - 1), static_cast<std::uint64_t>(n - i)) *
        binomial(static_cast<std::uint64_t>(k - 2 + i), static_cast<std::uint64_t>(i - 1));
  }
  return beta;
}

BettiSeries regular_sequence_series(int n, int kmax) {
  if (kmax < 1) throw DomainError("kmax must be >= 1");
  BettiSeries series;
  series.ideal = "regular sequence of length " + std::to_string(n);
  series.num_variables = static_cast<std::size_t>(n);
  for (int k = 1; k <= kmax; ++k) series.rows.push_back(closed_form_regular_sequence(n, k));
  return series;
}

FitOutcome fit_polynomial(std::span<const std::pair<long, BigInt>> values, int max_degree, int guard) {
  if (max_degree < 0) throw DomainError("max_degree must be >= 0");
  if (guard < 1) throw DomainError("guard must be >= 1");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].first != values[i - 1].first + 1) throw DomainError("values must be at consecutive k");
  }
  const std::size_t count = values.size();
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t nodes = static_cast<std::size_t>(d) + 1;
    if (nodes + static_cast<std::size_t>(guard) > count) break;
    std::vector<std::pair<Rational, Rational>> points;
    for (std::size_t i = count - nodes; i < count; ++i) {
      points.emplace_back(Rational(values[i].first), Rational(values[i].second));
    }
    RationalPolynomial poly = interpolate(points);
    const std::size_t first_guard = count - nodes - static_cast<std::size_t>(guard);
    bool ok = true;
    for (std::size_t i = first_guard; i < count - nodes && ok; ++i) {
      ok = poly.evaluate(Rational(values[i].first)) == Rational(values[i].second);
    }
    if (!ok) continue;
    std::size_t start = first_guard;
    while (start > 0 && poly.evaluate(Rational(values[start - 1].first)) == Rational(values[start - 1].second)) {
      --start;
    }
    return PolynomialFit{std::move(poly), values[start].first};
  }
  return NotStabilized{{}, "no polynomial of degree <= " + std::to_string(max_degree) +
                               " matches the last values with " + std::to_string(guard) + " guard points"};
}

void validate_profile(const KodiyalamProfile& p) {
  const auto& P = p.polynomials;
  if (P.empty() || P[0] != RationalPolynomial::constant(1)) {
    throw InvariantViolation("P0_is_one", "P_0 must be the constant 1");
  }
  if (P.size() < 2 || P[1].is_zero()) throw InvariantViolation("P1_nonzero", "P_1 vanishes");
  int apd = 0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (!P[i].is_zero()) apd = static_cast<int>(i);
  }
  if (apd != p.apd) throw InvariantViolation("apd", "apd does not match the last nonzero P_i");
  if (p.ell != P[1].degree() + 1) throw InvariantViolation("ell", "ell - 1 must equal deg P_1");
  for (std::size_t i = 2; i < P.size(); ++i) {
    if (P[i].degree() > P[i - 1].degree()) {
      throw InvariantViolation("degree_chain", "deg P_" + std::to_string(i) + " > deg P_" +
                                                   std::to_string(i - 1));
    }
  }
  int bigK = 0;
  for (std::size_t i = 1; i < P.size(); ++i) {
    if (P[i].degree() == p.ell - 1) bigK = static_cast<int>(i);
  }
  if (bigK != p.bigK) throw InvariantViolation("bigK", "K(I) does not match the degree profile");
  if (p.multiplicities.size() != static_cast<std::size_t>(bigK)) {
    throw InvariantViolation("multiplicities", "expected K(I) multiplicities");
  }
  const Rational scale(factorial(static_cast<std::uint64_t>(p.ell - 1)));
  BigInt alternating = 0;
  for (int i = 1; i <= bigK; ++i) {
    const Rational k_i = P[static_cast<std::size_t>(i)].leading_coefficient() * scale;
    if (k_i.get_den() != 1 || k_i <= 0) {
      throw InvariantViolation("multiplicity_integrality",
                               "k_" + std::to_string(i) + " = " + k_i.get_str() + " is not a positive integer");
    }
    if (k_i.get_num() != p.multiplicity(i)) {
      throw InvariantViolation("multiplicities", "stored k_" + std::to_string(i) + " disagrees with P_i");
    }
    alternating += (i % 2 == 0) ? p.multiplicity(i) : BigInt(-p.multiplicity(i));
  }
  if (p.ell >= 2 && alternating != 0) {
    throw InvariantViolation("alternating_multiplicities",
                             "sum (-1)^i k_i = " + alternating.get_str());
  }
}

ProfileOutcome kodiyalam_profile(const BettiSeries& series, int guard) {
  const std::size_t n = series.num_variables;
  if (n < 1) throw DomainError("series has no variables");
  KodiyalamProfile p;
  p.ideal = series.ideal;
  p.field = series.field;
  p.num_variables = n;

  NotStabilized failures;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto column = series.column(i);
    auto outcome = fit_polynomial(column, static_cast<int>(n) - 1, guard);
    if (auto* fit = std::get_if<PolynomialFit>(&outcome)) {
      p.polynomials.push_back(std::move(fit->poly));
      p.column_thresholds.push_back(fit->threshold);
    } else {
      failures.failed_columns.push_back(i);
      p.polynomials.emplace_back();
      p.column_thresholds.push_back(0);
    }
  }
  if (!failures.failed_columns.empty()) {
    failures.reason = "Betti columns did not stabilize by kmax=" + std::to_string(series.kmax()) +
                      " with guard " + std::to_string(guard);
    return failures;
  }

  p.k0 = *std::max_element(p.column_thresholds.begin(), p.column_thresholds.end());
  for (std::size_t i = 0; i <= n; ++i) {
    if (!p.polynomials[i].is_zero()) p.apd = static_cast<int>(i);
  }
  if (p.polynomials[1].is_zero()) throw InvariantViolation("P1_nonzero", "P_1 vanishes");
  p.ell = p.polynomials[1].degree() + 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (p.polynomials[i].degree() == p.ell - 1) p.bigK = static_cast<int>(i);
  }
  const Rational scale(factorial(static_cast<std::uint64_t>(p.ell - 1)));
  for (int i = 1; i <= p.bigK; ++i) {
    const Rational k_i = p.polynomials[static_cast<std::size_t>(i)].leading_coefficient() * scale;
    p.multiplicities.push_back(k_i.get_den() == 1 ? BigInt(k_i.get_num()) : BigInt(0));
  }
  validate_profile(p);
  return p;
}

void write_series_csv(std::ostream& out, const BettiSeries& series) {
  out << 'k';
  for (std::size_t i = 0; i <= series.num_variables; ++i) out << ",beta_" << i;
  out << '\n';
  for (int k = 1; k <= series.kmax(); ++k) {
    out << k;
    for (const auto& b : series.row(k)) out << ',' << b.get_str();
    out << '\n';
  }
}

json profile_to_json(const KodiyalamProfile& p) {
  json polys = json::array();
  json texts = json::array();
  for (const auto& poly : p.polynomials) {
    json coeffs = json::array();
    for (const auto& c : poly.coefficients()) coeffs.push_back(to_string(c));
    polys.push_back(std::move(coeffs));
    texts.push_back(poly.to_string("k"));
  }
  json mults = json::array();
  for (const auto& m : p.multiplicities) mults.push_back(m.get_str());
  return json{{"status", "stabilized"},
              {"ideal", p.ideal},
              {"field", p.field.name()},
              {"num_variables", p.num_variables},
              {"polynomials", std::move(polys)},
              {"polynomials_text", std::move(texts)},
              {"column_thresholds", p.column_thresholds},
              {"k0", p.k0},
              {"apd", p.apd},
              {"ell", p.ell},
              {"bigK", p.bigK},
              {"multiplicities", std::move(mults)}};
}

KodiyalamProfile profile_from_json(const json& j) {
  KodiyalamProfile p;
  p.ideal = j.at("ideal").get<std::string>();
  const auto field = j.at("field").get<std::string>();
  p.field = field == "Q" ? CoefficientField::rational()
                         : CoefficientField::prime(static_cast<std::uint32_t>(
                               std::stoul(field.substr(3, field.size() - 4))));
  p.num_variables = j.at("num_variables").get<std::size_t>();
  for (const auto& coeffs : j.at("polynomials")) {
    std::vector<Rational> c;
    for (const auto& s : coeffs) c.push_back(parse_rational(s.get<std::string>()));
    p.polynomials.emplace_back(std::move(c));
  }
  p.column_thresholds = j.at("column_thresholds").get<std::vector<long>>();
  p.k0 = j.at("k0").get<long>();
  p.apd = j.at("apd").get<int>();
  p.ell = j.at("ell").get<int>();
  p.bigK = j.at("bigK").get<int>();
  for (const auto& m : j.at("multiplicities")) p.multiplicities.emplace_back(m.get<std::string>());
  validate_profile(p);
  return p;
}

json not_stabilized_to_json(const NotStabilized& ns) {
  return json{{"status", "not_stabilized"}, {"failed_columns", ns.failed_columns}, {"reason", ns.reason}};
}

}  // namespace powerbetti

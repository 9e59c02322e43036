#include "powerbetti/verdicts.hpp"

#include <algorithm>

#include "powerbetti/errors.hpp"
#include "powerbetti/spectra.hpp"

namespace powerbetti {
namespace {

std::string compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c > 0 ? "gt" : c == 0 ? "eq" : "lt";
}

json strings(std::span<const BigInt> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::vector<BigInt> big_ints(const json& arr) {
  std::vector<BigInt> out;
  for (const auto& s : arr) out.emplace_back(s.get<std::string>());
  return out;
}

// k_i / k_1 and C(K-1, i-1) for i = 1..K.
void ratio_witness(const KodiyalamProfile& p, json& w) {
  json ratios = json::array(), binoms = json::array();
  for (int i = 1; i <= p.bigK; ++i) {
    Rational r(p.multiplicity(i), p.multiplicity(1));
    r.canonicalize();
    ratios.push_back(to_string(r));
    binoms.push_back(binomial(static_cast<std::uint64_t>(p.bigK - 1), static_cast<std::uint64_t>(i - 1)).get_str());
  }
  w["ratios"] = std::move(ratios);
  w["binomials"] = std::move(binoms);
}

struct RatioComparison {
  bool any_lt = false;
  bool all_eq = true;
  json comparison = json::array();
};

RatioComparison compare_ratios(const json& w) {
  RatioComparison out;
  const auto& ratios = w.at("ratios");
  const auto& binoms = w.at("binomials");
  if (ratios.size() != binoms.size()) throw Error("witness ratio and binomial lists differ in length");
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const auto c = compare(parse_rational(ratios[i].get<std::string>()), parse_rational(binoms[i].get<std::string>()));
    out.any_lt = out.any_lt || c == "lt";
    out.all_eq = out.all_eq && c == "eq";
    out.comparison.push_back(c);
  }
  return out;
}

std::vector<BigInt> trimmed_row(const std::vector<BigInt>& row) {
  std::size_t end = row.size();
  while (end > 1 && row[end - 1] == 0) --end;
  return {row.begin(), row.begin() + static_cast<std::ptrdiff_t>(end)};
}

bool all_strict(const std::vector<Concavity>& c) {
  return std::all_of(c.begin(), c.end(), [](Concavity x) { return x == Concavity::strict; });
}

json concavity_json(const std::vector<Concavity>& c) {
  json out = json::array();
  for (auto x : c) out.push_back(to_string(x));
  return out;
}

BigInt alternating_sum(std::span<const BigInt> row) {
  BigInt s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += (i % 2 == 0) ? row[i] : BigInt(-row[i]);
  return s;
}

Status status_conjecture(const json& w) {
  if (!w.at("applicable").get<bool>()) return Status::not_applicable;
  return compare_ratios(w).any_lt ? Status::fails : Status::holds;
}

Status status_corollary_satisfied(const json& w) {
  const bool pre = w.at("single_degree").get<bool>() && w.at("artinian").get<bool>() &&
                   w.at("linear_relations").get<bool>();
  if (!pre) return Status::not_applicable;
  const bool conclusion = compare_ratios(w).all_eq && w.at("bigK").get<int>() == w.at("n").get<int>();
  return conclusion ? Status::holds : Status::fails;
}

Status status_corollary_last(const json& w) {
  if (!w.at("ell_at_least_two").get<bool>() || !w.at("preconditions").get<bool>()) return Status::not_applicable;
  const auto row = big_ints(w.at("row"));
  if (row.size() < 3) return Status::inconclusive;
  return all_strict(log_concavity(row)) ? Status::holds : Status::inconclusive;
}

Status status_euler(const json& w) {
  for (const auto& r : w.at("rows")) {
    if (alternating_sum(big_ints(r)) != 0) return Status::fails;
  }
  return Status::holds;
}

Status status_theorem_main(const json& w) {
  if (!w.at("artinian").get<bool>()) return Status::not_applicable;
  return w.at("bigK").get<int>() == w.at("n").get<int>() ? Status::holds : Status::fails;
}

Status status_degree_chain(const json& w) {
  const auto& d = w.at("degrees");
  // null stands for the zero polynomial (degree minus infinity).
  for (std::size_t i = 2; i < d.size(); ++i) {
    if (d[i].is_null()) continue;
    if (d[i - 1].is_null() || d[i].get<int>() > d[i - 1].get<int>()) return Status::fails;
  }
  return Status::holds;
}

Status status_minus_one(const json& w) {
  if (!w.at("applicable").get<bool>()) return Status::not_applicable;
  if (parse_rational(w.at("limit_value").get<std::string>()) != 0) return Status::fails;
  for (const auto& v : w.at("values")) {
    if (parse_rational(v.get<std::string>()) != 0) return Status::fails;
  }
  return Status::holds;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not_applicable";
    case Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Status status_from_string(const std::string& s) {
  if (s == "holds") return Status::holds;
  if (s == "fails") return Status::fails;
  if (s == "not_applicable") return Status::not_applicable;
  if (s == "inconclusive") return Status::inconclusive;
  throw Error("unknown verdict status '" + s + "'");
}

std::string to_string(Concavity c) {
  switch (c) {
    case Concavity::strict: return "strict";
    case Concavity::weak: return "weak";
    case Concavity::fail: return "fail";
  }
  return "fail";
}

const VerdictEntry* VerdictReport::find(const std::string& id) const {
  for (const auto& e : statements) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<Concavity> log_concavity(std::span<const BigInt> seq) {
  if (seq.size() < 3) throw DomainError("log-concavity needs at least three terms");
  std::vector<Concavity> out;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const BigInt lhs = seq[i] * seq[i];
    const BigInt rhs = seq[i - 1] * seq[i + 1];
    out.push_back(lhs > rhs ? Concavity::strict : lhs == rhs ? Concavity::weak : Concavity::fail);
  }
  return out;
}

Unimodality unimodality(std::span<const BigInt> seq) {
  if (seq.empty()) throw DomainError("unimodality needs a nonempty sequence");
  Unimodality u;
  const auto max_it = std::max_element(seq.begin(), seq.end());
  u.peak_lo = static_cast<std::size_t>(max_it - seq.begin());
  u.peak_hi = u.peak_lo;
  while (u.peak_hi + 1 < seq.size() && seq[u.peak_hi + 1] == *max_it) ++u.peak_hi;
  u.unimodal = true;
  u.strict = true;
  for (std::size_t i = 1; i <= u.peak_lo; ++i) {
    if (seq[i] < seq[i - 1]) u.unimodal = false;
    if (seq[i] <= seq[i - 1]) u.strict = false;
  }
  for (std::size_t i = u.peak_hi + 1; i < seq.size(); ++i) {
    if (seq[i] > seq[i - 1]) u.unimodal = false;
    if (seq[i] >= seq[i - 1]) u.strict = false;
  }
  u.strict = u.strict && u.unimodal;
  return u;
}

VerdictEntry conjecture_check(const KodiyalamProfile& profile) {
  VerdictEntry e{"conjecture", Status::not_applicable, json::object()};
  e.witness["applicable"] = profile.ell >= 2;
  e.witness["bigK"] = profile.bigK;
  ratio_witness(profile, e.witness);
  const auto cmp = compare_ratios(e.witness);
  e.witness["comparison"] = cmp.comparison;
  e.witness["equality_everywhere"] = cmp.all_eq;
  e.status = status_conjecture(e.witness);
  return e;
}

VerdictEntry corollary_satisfied_check(const MonomialIdeal& ideal, const BettiTable& table,
                                       const KodiyalamProfile& profile) {
  VerdictEntry e{"corollary_single_degree", Status::not_applicable, json::object()};
  const auto deg = generator_degree_profile(ideal);
  const bool artinian = is_artinian(ideal);
  json offending = json::array();
  bool linear = false;
  if (deg.is_single_degree && deg.degree) {
    linear = true;
    for (const auto& [key, value] : table.entries) {
      if (key.first == 2 && value != 0 && key.second.total_degree() != *deg.degree + 1) {
        linear = false;
        offending.push_back(colon_joined(key.second));
      }
    }
  }
  auto& w = e.witness;
  w["single_degree"] = deg.is_single_degree;
  w["degree"] = deg.degree ? json(*deg.degree) : json(nullptr);
  w["artinian"] = artinian;
  w["linear_relations"] = linear;
  w["nonlinear_second_syzygy_degrees"] = std::move(offending);
  w["preconditions"] = deg.is_single_degree && artinian && linear;
  w["n"] = ideal.num_variables();
  w["bigK"] = profile.bigK;
  ratio_witness(profile, w);
  const auto cmp = compare_ratios(w);
  w["comparison"] = cmp.comparison;
  w["conclusion_holds"] = cmp.all_eq;
  w["bigK_equals_n"] = static_cast<std::size_t>(profile.bigK) == ideal.num_variables();
  e.status = status_corollary_satisfied(w);
  return e;
}

VerdictEntry corollary_last_check(const BettiSeries& series, const KodiyalamProfile& profile,
                                  bool preconditions_hold) {
  VerdictEntry e{"corollary_log_concave", Status::not_applicable, json::object()};
  const auto row = trimmed_row(series.row(series.kmax()));
  auto& w = e.witness;
  w["ell_at_least_two"] = profile.ell >= 2;
  w["preconditions"] = preconditions_hold;
  w["k"] = series.kmax();
  w["row"] = strings(row);
  if (row.size() >= 3) {
    const auto c = log_concavity(row);
    w["positions"] = concavity_json(c);
    w["strictly_log_concave"] = all_strict(c);
  }
  const auto u = unimodality(row);
  w["unimodal"] = u.unimodal;
  w["strictly_unimodal"] = u.strict;
  w["peak"] = json::array({u.peak_lo, u.peak_hi});
  e.status = status_corollary_last(w);
  return e;
}

VerdictEntry euler_check(const BettiSeries& series) {
  VerdictEntry e{"euler", Status::holds, json::object()};
  json rows = json::array();
  for (const auto& r : series.rows) rows.push_back(strings(r));
  e.witness["rows"] = std::move(rows);
  e.status = status_euler(e.witness);
  return e;
}

VerdictEntry euler_check(std::span<const BigInt> row) {
  VerdictEntry e{"euler", Status::holds, json::object()};
  e.witness["rows"] = json::array({strings(row)});
  e.status = status_euler(e.witness);
  return e;
}

VerdictEntry theorem_main_check(const MonomialIdeal& ideal, const KodiyalamProfile& profile) {
  VerdictEntry e{"theorem_main", Status::not_applicable, json::object()};
  e.witness["artinian"] = is_artinian(ideal);
  e.witness["n"] = ideal.num_variables();
  e.witness["bigK"] = profile.bigK;
  e.status = status_theorem_main(e.witness);
  return e;
}

VerdictEntry degree_chain_check(const KodiyalamProfile& profile) {
  VerdictEntry e{"degree_chain", Status::holds, json::object()};
  json degrees = json::array();
  for (const auto& p : profile.polynomials) degrees.push_back(p.is_zero() ? json(nullptr) : json(p.degree()));
  e.witness["degrees"] = std::move(degrees);
  e.status = status_degree_chain(e.witness);
  return e;
}

VerdictEntry minus_one_check(const KodiyalamProfile& profile, long kmax) {
  VerdictEntry e{"minus_one_root", Status::not_applicable, json::object()};
  auto& w = e.witness;
  w["applicable"] = profile.ell >= 2;
  w["k0"] = profile.k0;
  w["kmax"] = kmax;
  json values = json::array();
  for (long k = profile.k0; k <= kmax; ++k) {
    values.push_back(to_string(betti_polynomial_at(profile, k).evaluate(Rational(-1))));
  }
  w["values"] = std::move(values);
  // f(-1) = sum_i (-1)^{apd-i} k_i.
  Rational f = 0;
  for (int i = 1; i <= profile.bigK; ++i) {
    const Rational k_i(profile.multiplicity(i));
    f += ((profile.apd - i) % 2 == 0) ? k_i : Rational(-k_i);
  }
  w["limit_value"] = to_string(f);
  e.status = status_minus_one(w);
  return e;
}

VerdictReport evaluate_verdicts(const MonomialIdeal& ideal, const BettiTable& table, const BettiSeries& series,
                                const KodiyalamProfile& profile) {
  VerdictReport r;
  r.ideal = ideal.to_string();
  r.statements.push_back(euler_check(series));
  r.statements.push_back(degree_chain_check(profile));
  r.statements.push_back(minus_one_check(profile, series.kmax()));
  r.statements.push_back(conjecture_check(profile));
  r.statements.push_back(theorem_main_check(ideal, profile));
  auto sat = corollary_satisfied_check(ideal, table, profile);
  const bool pre = sat.witness.at("preconditions").get<bool>();
  r.statements.push_back(std::move(sat));
  r.statements.push_back(corollary_last_check(series, profile, pre));
  return r;
}

Status replay_status(const VerdictEntry& e) {
  const auto& w = e.witness;
  if (e.id == "conjecture") return status_conjecture(w);
  if (e.id == "corollary_single_degree") return status_corollary_satisfied(w);
  if (e.id == "corollary_log_concave") return status_corollary_last(w);
  if (e.id == "euler") return status_euler(w);
  if (e.id == "theorem_main") return status_theorem_main(w);
  if (e.id == "degree_chain") return status_degree_chain(w);
  if (e.id == "minus_one_root") return status_minus_one(w);
  throw Error("no replay rule for verdict '" + e.id + "'");
}

json verdict_report_to_json(const VerdictReport& report) {
  json statements = json::array();
  for (const auto& e : report.statements) {
    statements.push_back(json{{"id", e.id}, {"status", to_string(e.status)}, {"witness", e.witness}});
  }
  return json{{"ideal", report.ideal}, {"statements", std::move(statements)}};
}

}  // namespace powerbetti

#include "powerbetti/scan.hpp"

#include <chrono>
#include <limits>
#include <random>

#include "powerbetti/errors.hpp"
#include "powerbetti/verdicts.hpp"

namespace powerbetti {
namespace {

// Uniform draw in [0, bound] by rejection; the library distributions are not
// specified bit-for-bit across standard libraries, the engine is.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t range = bound + 1;
  if (range == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

std::vector<std::string> variable_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

json profile_summary(const KodiyalamProfile& p) {
  json texts = json::array();
  for (const auto& poly : p.polynomials) texts.push_back(poly.to_string("k"));
  json mults = json::array();
  for (const auto& m : p.multiplicities) mults.push_back(m.get_str());
  return json{{"polynomials", std::move(texts)}, {"k0", p.k0},       {"apd", p.apd},
              {"ell", p.ell},                   {"bigK", p.bigK},   {"multiplicities", std::move(mults)}};
}

json finding(const json& record, const std::string& kind, const std::string& detail) {
  return json{{"type", "finding"},
              {"kind", kind},
              {"index", record.at("index")},
              {"seed", record.at("seed")},
              {"params", record.at("params")},
              {"ideal", record.at("ideal")},
              {"detail", detail}};
}

}  // namespace

json scan_parameters_to_json(const ScanParameters& p) {
  return json{{"vars", p.vars},       {"gens", p.gens},   {"max_exp", p.max_exp}, {"artinian", p.artinian},
              {"kmax", p.kmax},       {"guard", p.guard}, {"field", p.field.name()}};
}

MonomialIdeal random_ideal(const ScanParameters& params, std::uint64_t index) {
  if (params.vars < 1 || params.gens < 1) throw DomainError("scan needs at least one variable and generator");
  if (params.max_exp < 1) throw DomainError("scan needs max exponent >= 1");
  std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<ExponentVector> gens;
  if (params.artinian) {
    for (std::size_t i = 0; i < params.vars; ++i) {
      std::vector<Exponent> e(params.vars, 0);
      e[i] = params.max_exp + 1;
      gens.emplace_back(std::move(e));
    }
  }
  for (std::size_t g = 0; g < params.gens; ++g) {
    std::vector<Exponent> e(params.vars, 0);
    bool zero = true;
    while (zero) {
      for (auto& x : e) x = static_cast<Exponent>(draw(rng, params.max_exp));
      zero = std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(variable_names(params.vars), std::move(gens));
}

std::vector<json> scan_one(const ScanParameters& params, std::uint64_t index) {
  const auto start = std::chrono::steady_clock::now();
  const MonomialIdeal ideal = random_ideal(params, index);
  json record{{"type", "record"}, {"index", index}, {"seed", params.seed}, {"params", scan_parameters_to_json(params)},
              {"ideal", ideal.to_string()}};
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(colon_joined(g));
  record["generators"] = std::move(gens);

  std::vector<json> findings;
  try {
    const BettiSeries series = betti_series(ideal, params.kmax, params.field, params.limits);
    json totals = json::array();
    for (const auto& row : series.rows) {
      json r = json::array();
      for (const auto& b : row) r.push_back(b.get_str());
      totals.push_back(std::move(r));
    }
    record["betti_totals"] = std::move(totals);
    const auto outcome = kodiyalam_profile(series, params.guard);
    if (const auto* ns = std::get_if<NotStabilized>(&outcome)) {
      record["status"] = "not_stabilized";
      record["failed_columns"] = ns->failed_columns;
    } else {
      const auto& profile = std::get<KodiyalamProfile>(outcome);
      record["status"] = "stabilized";
      record["profile"] = profile_summary(profile);
      const BettiTable table = betti_table(ideal, params.field, params.limits);
      const VerdictReport report = evaluate_verdicts(ideal, table, series, profile);
      json verdicts = json::object();
      for (const auto& e : report.statements) verdicts[e.id] = to_string(e.status);
      record["verdicts"] = verdicts;
      for (const auto& e : report.statements) {
        if (e.status != Status::fails) continue;
        if (e.id == "conjecture") {
          findings.push_back(finding(record, "conjecture_violation", e.witness.dump()));
        } else if (e.id == "degree_chain") {
          findings.push_back(finding(record, "degree_chain_violation", e.witness.dump()));
        } else if (e.id == "corollary_single_degree") {
          findings.push_back(finding(record, "corollary_violation", e.witness.dump()));
        } else {
          findings.push_back(finding(record, e.id + "_violation", e.witness.dump()));
        }
      }
    }
  } catch (const InvariantViolation& e) {
    record["status"] = "error";
    record["error"] = e.what();
    const std::string& inv = e.invariant();
    const std::string kind = inv == "degree_chain"                 ? "degree_chain_violation"
                             : inv == "multiplicity_integrality"   ? "integrality_violation"
                                                                   : "invariant_violation";
    record["invariant"] = inv;
    findings.push_back(finding(record, kind, e.what()));
  } catch (const Error& e) {
    record["status"] = "error";
    record["error"] = e.what();
  }
  if (params.timing) {
    record["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::vector<json> out{std::move(record)};
  for (auto& f : findings) out.push_back(std::move(f));
  return out;
}

ScanSummary run_scan(const ScanParameters& params, std::ostream& out) {
  ScanSummary summary;
  for (std::uint64_t i = 0; i < params.count; ++i) {
    const auto lines = scan_one(params, i);
    for (const auto& line : lines) {
      out << line.dump() << '\n';
      if (line.at("type") == "finding") ++summary.findings;
    }
    ++summary.records;
    const auto status = lines.front().at("status").get<std::string>();
    if (status == "stabilized") ++summary.stabilized;
    else if (status == "not_stabilized") ++summary.not_stabilized;
    else ++summary.errors;
  }
  out.flush();
  return summary;
}

}  // namespace powerbetti

// powerbetti: Betti numbers of powers of monomial ideals, their asymptotic
// polynomials, root loci and conjecture scans.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "powerbetti/asymptotics.hpp"
#include "powerbetti/errors.hpp"
#include "powerbetti/monomial.hpp"
#include "powerbetti/resolution.hpp"
#include "powerbetti/scan.hpp"
#include "powerbetti/spectra.hpp"
#include "powerbetti/verdicts.hpp"

namespace pb = powerbetti;

namespace {

constexpr int kUsageError = 1;
constexpr int kComputationError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to a file when a path is given, to stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// A bad --field value is a usage error, not a computation error.
pb::CoefficientField field_arg(const std::string& text) {
  try {
    return pb::CoefficientField::parse(text);
  } catch (const pb::Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<pb::CoefficientField> parse_fields(const std::string& list) {
  std::vector<pb::CoefficientField> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(field_arg(item));
  }
  if (out.empty()) throw UsageError("no fields given");
  return out;
}

pb::json totals_json(const std::vector<std::uint64_t>& v) {
  pb::json a = pb::json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

void add_limit_options(CLI::App* cmd, pb::ResolutionLimits& limits) {
  cmd->add_option("--max-lattice", limits.max_lattice_size, "Largest lcm lattice before giving up")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-taylor", limits.max_taylor_generators, "Most generators the Taylor oracle accepts")
      ->check(CLI::PositiveNumber);
}

// ---- betti ---------------------------------------------------------------

struct BettiArgs {
  std::string file;
  int power = 1;
  std::string field = "q";
  pb::ResolutionLimits limits;
};

int cmd_betti(const BettiArgs& a) {
  const auto ideal = pb::load_ideal_file(a.file);
  const auto table = pb::betti_table(pb::power(ideal, a.power), field_arg(a.field), a.limits);
  pb::write_betti_csv(std::cout, table);
  return 0;
}

// ---- profile -------------------------------------------------------------

struct ProfileArgs {
  std::string file;
  int kmax = 0;
  int guard = 3;
  std::string field = "q";
  std::string series_csv;
  pb::ResolutionLimits limits;
};

int cmd_profile(const ProfileArgs& a) {
  const auto ideal = pb::load_ideal_file(a.file);
  const auto field = field_arg(a.field);
  const int kmax = a.kmax > 0 ? a.kmax : static_cast<int>(ideal.num_variables()) + 6;
  const auto series = pb::betti_series(ideal, kmax, field, a.limits);
  if (!a.series_csv.empty()) {
    Output out(a.series_csv);
    pb::write_series_csv(out.stream(), series);
  }

  pb::json result;
  const auto outcome = pb::kodiyalam_profile(series, a.guard);
  if (const auto* ns = std::get_if<pb::NotStabilized>(&outcome)) {
    pb::VerdictReport report;
    report.ideal = ideal.to_string();
    report.statements.push_back(pb::euler_check(series));
    result["profile"] = pb::not_stabilized_to_json(*ns);
    result["verdicts"] = pb::verdict_report_to_json(report);
  } else {
    const auto& profile = std::get<pb::KodiyalamProfile>(outcome);
    result["profile"] = pb::profile_to_json(profile);
    if (profile.ell == 1) {
      result["note"] = "ell = 1 (principal ideal up to a common factor): trivial situation, limit statements skipped";
    }
    const auto table = pb::betti_table(ideal, field, a.limits);
    result["verdicts"] = pb::verdict_report_to_json(pb::evaluate_verdicts(ideal, table, series, profile));
  }
  std::cout << result.dump(2) << '\n';
  return 0;
}

// ---- roots ---------------------------------------------------------------

struct RootsArgs {
  std::string file;
  int regular_sequence = 0;
  long kmin = 0;
  long kmax = 20;
  int profile_kmax = 0;
  int guard = 3;
  std::string csv;
  std::string svg;
  std::string report;
  double clip = 10.0;
  pb::ResolutionLimits limits;
};

int cmd_roots(const RootsArgs& a) {
  if (a.file.empty() == (a.regular_sequence == 0)) {
    throw UsageError("give exactly one of an ideal file or --regular-sequence");
  }
  pb::BettiSeries series;
  std::string title;
  if (a.regular_sequence > 0) {
    const int n = a.regular_sequence;
    series = pb::regular_sequence_series(n, a.profile_kmax > 0 ? a.profile_kmax : n + a.guard + 1);
    title = "Roots of P(k,t), regular sequence n=" + std::to_string(n);
  } else {
    const auto ideal = pb::load_ideal_file(a.file);
    series = pb::betti_series(ideal, a.profile_kmax > 0 ? a.profile_kmax : static_cast<int>(ideal.num_variables()) + 6,
                              pb::CoefficientField::rational(), a.limits);
    title = "Roots of P(k,t), " + ideal.to_string();
  }
  const auto outcome = pb::kodiyalam_profile(series, a.guard);
  if (const auto* ns = std::get_if<pb::NotStabilized>(&outcome)) {
    throw pb::Error("profile did not stabilize: " + ns->reason);
  }
  const auto& profile = std::get<pb::KodiyalamProfile>(outcome);
  const long kmin = a.kmin > 0 ? a.kmin : profile.k0;
  if (a.kmax < kmin) throw UsageError("--kmax must be >= kmin");

  const auto locus = pb::root_locus(profile, kmin, a.kmax);
  {
    Output out(a.csv);
    pb::write_locus_csv(out.stream(), locus);
  }
  if (!a.svg.empty()) {
    Output out(a.svg);
    pb::SvgOptions opts;
    opts.clip = a.clip;
    opts.title = title;
    pb::write_locus_svg(out.stream(), locus, opts);
  }
  if (!a.report.empty()) {
    Output out(a.report);
    pb::json j;
    if (profile.ell >= 2) {
      j = pb::limit_report_to_json(pb::verify_limit_theorem(profile, locus));
      pb::json counts = pb::json::array();
      for (long k = kmin; k <= a.kmax; ++k) counts.push_back(pb::numbered_real_root_count(profile, k));
      j["numbered_real_root_counts"] = std::move(counts);
    } else {
      j = pb::json{{"note", "ell = 1: no limit polynomial"}};
    }
    out.stream() << j.dump(2) << '\n';
  }
  return 0;
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
  pb::ScanParameters params;
  std::string field = "q";
  std::string out;
};

int cmd_scan(ScanArgs a) {
  a.params.field = field_arg(a.field);
  if (a.params.kmax <= 0) a.params.kmax = static_cast<int>(a.params.vars) + 6;
  Output out(a.out);
  const auto s = pb::run_scan(a.params, out.stream());
  std::cerr << "scan: " << s.records << " records, " << s.stabilized << " stabilized, " << s.not_stabilized
            << " not stabilized, " << s.errors << " errors, " << s.findings << " findings\n";
  return 0;
}

// ---- oracle-check --------------------------------------------------------

struct OracleArgs {
  std::string file;
  int kmax = 3;
  std::string fields = "q,2,3";
  pb::ResolutionLimits limits;
};

int cmd_oracle_check(const OracleArgs& a) {
  const auto ideal = pb::load_ideal_file(a.file);
  const auto fields = parse_fields(a.fields);
  const auto& limits = a.limits;
  pb::json comparisons = pb::json::array();
  pb::json findings = pb::json::array();
  bool all_agree = true;

  for (int k = 1; k <= a.kmax; ++k) {
    const auto Ik = pb::power(ideal, k);
    std::map<std::string, std::vector<std::uint64_t>> by_field;
    for (const auto& field : fields) {
      const auto koszul = pb::betti_table(Ik, field, limits).totals;
      pb::json entry{{"k", k}, {"field", field.name()}, {"koszul", totals_json(koszul)}};
      if (Ik.num_generators() <= limits.max_taylor_generators) {
        const auto taylor = pb::taylor_betti(Ik, field, limits);
        entry["taylor"] = totals_json(taylor);
        entry["agree"] = taylor == koszul;
        all_agree = all_agree && taylor == koszul;
      } else {
        entry["taylor"] = nullptr;
        entry["skipped"] = "more than " + std::to_string(limits.max_taylor_generators) + " generators";
      }
      by_field[field.name()] = koszul;
      comparisons.push_back(std::move(entry));
    }
    const auto& reference = by_field.begin()->second;
    for (const auto& [name, totals] : by_field) {
      if (totals != reference) {
        findings.push_back(pb::json{{"type", "finding"},
                                    {"kind", "characteristic_dependence"},
                                    {"k", k},
                                    {"fields", pb::json::array({by_field.begin()->first, name})},
                                    {"betti", pb::json::array({totals_json(reference), totals_json(totals)})}});
      }
    }
  }

  pb::json result{{"ideal", ideal.to_string()}, {"kmax", a.kmax}, {"comparisons", std::move(comparisons)}};
  if (const auto n = pb::regular_sequence_length(ideal)) {
    pb::json closed = pb::json::array();
    bool match = true;
    for (int k = 1; k <= a.kmax; ++k) {
      auto expected = pb::closed_form_regular_sequence(static_cast<int>(*n), k);
      expected.resize(ideal.num_variables() + 1, 0);
      const auto got = pb::betti_table(pb::power(ideal, k), pb::CoefficientField::rational(), limits).totals;
      bool eq = got.size() == expected.size();
      for (std::size_t i = 0; eq && i < got.size(); ++i) eq = expected[i] == got[i];
      match = match && eq;
      closed.push_back(pb::json{{"k", k}, {"matches", eq}});
    }
    result["closed_form"] = std::move(closed);
    all_agree = all_agree && match;
  }
  result["findings"] = std::move(findings);
  result["engines_agree"] = all_agree;
  std::cout << result.dump(2) << '\n';
  return all_agree ? 0 : kComputationError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of powers of monomial ideals"};
  app.require_subcommand(1);

  BettiArgs betti;
  auto* sb = app.add_subcommand("betti", "Multigraded Betti table of S/I^k as CSV");
  sb->add_option("ideal", betti.file, "Ideal file")->check(CLI::ExistingFile)->required();
  sb->add_option("--power,-k", betti.power, "Power k")->check(CLI::PositiveNumber);
  sb->add_option("--field", betti.field, "q or a prime");
  add_limit_options(sb, betti.limits);

  ProfileArgs profile;
  auto* sp = app.add_subcommand("profile", "Asymptotic Betti polynomials and verdicts as JSON");
  sp->add_option("ideal", profile.file, "Ideal file")->check(CLI::ExistingFile)->required();
  sp->add_option("--kmax", profile.kmax, "Largest power computed (default n+6)")->check(CLI::PositiveNumber);
  sp->add_option("--guard", profile.guard, "Extra points a fit must reproduce")->check(CLI::PositiveNumber);
  sp->add_option("--field", profile.field, "q or a prime");
  sp->add_option("--series-csv", profile.series_csv, "Also write the Betti series as CSV");
  add_limit_options(sp, profile.limits);

  RootsArgs roots;
  auto* sr = app.add_subcommand("roots", "Root locus of P(k,t)");
  sr->add_option("ideal", roots.file, "Ideal file")->check(CLI::ExistingFile);
  sr->add_option("--regular-sequence", roots.regular_sequence, "Use the closed form for a regular sequence of length n")
      ->check(CLI::PositiveNumber);
  sr->add_option("--kmin", roots.kmin, "First k (default: stabilization threshold)")->check(CLI::PositiveNumber);
  sr->add_option("--kmax", roots.kmax, "Last k")->check(CLI::PositiveNumber);
  sr->add_option("--profile-kmax", roots.profile_kmax, "Powers computed to fit the profile")->check(CLI::PositiveNumber);
  sr->add_option("--guard", roots.guard, "Extra points a fit must reproduce")->check(CLI::PositiveNumber);
  sr->add_option("--csv", roots.csv, "CSV path (default stdout)");
  sr->add_option("--svg", roots.svg, "SVG path");
  sr->add_option("--report", roots.report, "Convergence report JSON path");
  sr->add_option("--clip", roots.clip, "Plot radius")->check(CLI::PositiveNumber);
  add_limit_options(sr, roots.limits);

  ScanArgs scan;
  scan.params.kmax = 0;
  auto* ss = app.add_subcommand("scan", "Seeded random conjecture scan as JSONL");
  ss->add_option("--vars,-n", scan.params.vars, "Number of variables")->check(CLI::PositiveNumber);
  ss->add_option("--gens,-m", scan.params.gens, "Random generators per ideal")->check(CLI::PositiveNumber);
  ss->add_option("--max-exp,-d", scan.params.max_exp, "Largest exponent")->check(CLI::PositiveNumber);
  ss->add_option("--count,-N", scan.params.count, "Number of ideals");
  ss->add_option("--seed", scan.params.seed, "Seed");
  ss->add_flag("--artinian", scan.params.artinian, "Add x_i^(d+1) for every variable");
  ss->add_option("--kmax", scan.params.kmax, "Largest power (default n+6)");
  ss->add_option("--guard", scan.params.guard, "Extra points a fit must reproduce")->check(CLI::PositiveNumber);
  ss->add_option("--field", scan.field, "q or a prime");
  ss->add_option("--out,-o", scan.out, "JSONL path (default stdout)");
  ss->add_flag("--timing", scan.params.timing, "Record wall-clock time per ideal");
  add_limit_options(ss, scan.params.limits);

  OracleArgs oracle;
  auto* so = app.add_subcommand("oracle-check", "Compare the Koszul and Taylor engines across fields");
  so->add_option("ideal", oracle.file, "Ideal file")->check(CLI::ExistingFile)->required();
  so->add_option("--kmax", oracle.kmax, "Largest power")->check(CLI::PositiveNumber);
  so->add_option("--fields", oracle.fields, "Comma-separated fields, e.g. q,2,3");
  add_limit_options(so, oracle.limits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*sb) return cmd_betti(betti);
    if (*sp) return cmd_profile(profile);
    if (*sr) return cmd_roots(roots);
    if (*ss) return cmd_scan(scan);
    if (*so) return cmd_oracle_check(oracle);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const pb::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kUsageError;
}

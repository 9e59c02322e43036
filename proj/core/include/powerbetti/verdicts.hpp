#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "powerbetti/asymptotics.hpp"
#include "powerbetti/monomial.hpp"
#include "powerbetti/resolution.hpp"

namespace powerbetti {

enum class Status { holds, fails, not_applicable, inconclusive };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

// One checked statement. The witness holds the exact data (integers and
// "p/q" strings) from which the status is recomputed by replay_status.
struct VerdictEntry {
  std::string id;
  Status status = Status::inconclusive;
  json witness;
};

struct VerdictReport {
  std::string ideal;
  std::vector<VerdictEntry> statements;

  const VerdictEntry* find(const std::string& id) const;
};

enum class Concavity { strict, weak, fail };
std::string to_string(Concavity c);

// a_i^2 against a_{i-1} a_{i+1} for every interior i; entry j is position j+1.
std::vector<Concavity> log_concavity(std::span<const BigInt> seq);

struct Unimodality {
  bool unimodal = false;
  // Weakly rising to [peak_lo, peak_hi], constant there, weakly falling after.
  bool strict = false;
  std::size_t peak_lo = 0;
  std::size_t peak_hi = 0;
};
Unimodality unimodality(std::span<const BigInt> seq);

// k_i / k_1 >= C(K-1, i-1) for i = 1..K; witness flags equality everywhere.
VerdictEntry conjecture_check(const KodiyalamProfile& profile);

// Preconditions of the single-degree Artinian corollary (single degree d,
// Artinian, beta_{2,a} = 0 unless |a| = d+1) and its conclusion, which is
// evaluated either way. `table` is the multigraded table of I itself.
VerdictEntry corollary_satisfied_check(const MonomialIdeal& ideal, const BettiTable& table,
                                       const KodiyalamProfile& profile);

// Strict log-concavity of the Betti row at the largest computed k. Needs the
// preconditions result from corollary_satisfied_check for applicability.
VerdictEntry corollary_last_check(const BettiSeries& series, const KodiyalamProfile& profile,
                                  bool preconditions_hold);

// Alternating sum of every row in the series is zero.
VerdictEntry euler_check(const BettiSeries& series);
VerdictEntry euler_check(std::span<const BigInt> row);

// Artinian implies K(I) = n.
VerdictEntry theorem_main_check(const MonomialIdeal& ideal, const KodiyalamProfile& profile);
// deg P_1 >= deg P_2 >= ... >= deg P_n.
VerdictEntry degree_chain_check(const KodiyalamProfile& profile);
// P(I)(k, -1) = 0 for k0 <= k <= kmax and f(-1) = 0 for the limit polynomial.
VerdictEntry minus_one_check(const KodiyalamProfile& profile, long kmax);

// Everything above for a stabilized profile.
VerdictReport evaluate_verdicts(const MonomialIdeal& ideal, const BettiTable& table, const BettiSeries& series,
                                const KodiyalamProfile& profile);

// Recomputes the status from the stored witness alone.
Status replay_status(const VerdictEntry& entry);

json verdict_report_to_json(const VerdictReport& report);

}  // namespace powerbetti

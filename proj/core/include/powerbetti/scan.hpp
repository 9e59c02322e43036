#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "powerbetti/asymptotics.hpp"
#include "powerbetti/monomial.hpp"
#include "powerbetti/resolution.hpp"

namespace powerbetti {

struct ScanParameters {
  std::size_t vars = 3;
  std::size_t gens = 4;
  std::uint32_t max_exp = 4;
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  // Add x_i^{max_exp+1} for every i.
  bool artinian = false;
  int kmax = 9;
  int guard = 3;
  CoefficientField field = CoefficientField::rational();
  ResolutionLimits limits{};
  // Wall-clock milliseconds per record; off by default so output is
  // byte-for-byte reproducible.
  bool timing = false;
};

// Record `index` of a scan: `gens` exponent vectors uniform in {0..d}^n minus
// zero, from a generator seeded by (seed, index) alone.
MonomialIdeal random_ideal(const ScanParameters& params, std::uint64_t index);

struct ScanSummary {
  std::uint64_t records = 0;
  std::uint64_t stabilized = 0;
  std::uint64_t not_stabilized = 0;
  std::uint64_t errors = 0;
  std::uint64_t findings = 0;
};

// One JSONL record (type "record") plus any findings (type "finding").
// Failures of a single ideal are captured in the record, never thrown.
std::vector<json> scan_one(const ScanParameters& params, std::uint64_t index);

// Writes all records in index order, one JSON object per line.
ScanSummary run_scan(const ScanParameters& params, std::ostream& out);

json scan_parameters_to_json(const ScanParameters& params);

}  // namespace powerbetti

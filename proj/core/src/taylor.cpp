#include <algorithm>
#include <bit>
#include <map>

#include "powerbetti/errors.hpp"
#include "powerbetti/resolution.hpp"

namespace powerbetti {

// Cells of the Taylor complex are subsets σ of the generators, in
// multidegree lcm(σ). After tensoring with the residue field the differential
// keeps only the faces σ \ {g_t} with the same lcm, with sign (-1)^t, so the
// complex splits into one block per multidegree.
std::vector<std::uint64_t> taylor_betti(const MonomialIdeal& ideal, const CoefficientField& field,
                                        const ResolutionLimits& limits) {
  if (ideal.is_unit()) throw DomainError("Betti numbers require a proper ideal");
  const std::size_t m = ideal.num_generators();
  if (m > limits.max_taylor_generators || m > 30) {
    throw ResourceError("Taylor complex needs " + std::to_string(m) + " generators, cap is " +
                        std::to_string(limits.max_taylor_generators));
  }
  const std::size_t n = ideal.num_variables();
  const auto& gens = ideal.generators();
  const std::uint32_t cells = std::uint32_t{1} << m;

  std::vector<ExponentVector> lcms(cells, ExponentVector(n));
  for (std::uint32_t s = 1; s < cells; ++s) {
    const int low = std::countr_zero(s);
    lcms[s] = lcm(lcms[s & (s - 1)], gens[static_cast<std::size_t>(low)]);
  }

  std::map<ExponentVector, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t s = 0; s < cells; ++s) blocks[lcms[s]].push_back(s);

  std::vector<std::uint64_t> betti(std::max(n, m) + 2, 0);
  for (const auto& [degree, members] : blocks) {
    std::vector<std::vector<std::uint32_t>> by_size(m + 2);
    for (auto s : members) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);

    std::vector<std::size_t> rank_of(m + 2, 0);  // rank of d: size s -> size s-1
    for (std::size_t s = 1; s <= m; ++s) {
      const auto& cols = by_size[s];
      const auto& rows = by_size[s - 1];
      if (cols.empty() || rows.empty()) continue;
      IntMatrix d(rows.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        int t = 0;
        for (std::size_t g = 0; g < m; ++g) {
          const std::uint32_t bit = std::uint32_t{1} << g;
          if (!(cols[c] & bit)) continue;
          const auto it = std::lower_bound(rows.begin(), rows.end(), cols[c] & ~bit);
          if (it != rows.end() && *it == (cols[c] & ~bit)) {
            d(static_cast<std::size_t>(it - rows.begin()), c) = (t % 2 == 0) ? 1 : -1;
          }
          ++t;
        }
      }
      rank_of[s] = exact_rank(d, field);
    }
    for (std::size_t s = 0; s <= m; ++s) {
      betti[s] += by_size[s].size() - rank_of[s] - rank_of[s + 1];
    }
  }

  for (std::size_t i = n + 1; i < betti.size(); ++i) {
    if (betti[i] != 0) throw InvariantViolation("taylor_betti", "nonzero Betti number beyond n");
  }
  betti.resize(n + 1);
  return betti;
}

}  // namespace powerbetti

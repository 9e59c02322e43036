// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#ifndef POWERBETTI_FIXTURES
#error "POWERBETTI_FIXTURES must point at tests/fixtures"
#endif

namespace oracle {

using Mono = std::vector<std::uint32_t>;

inline std::string fixture(const std::string& name) { return std::string(POWERBETTI_FIXTURES) + "/" + name; }

inline bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool member(const Mono& u, const std::vector<Mono>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Mono& g) { return divides(g, u); });
}

// Quadratic filter: keep g unless some other distinct element divides it.
inline std::vector<Mono> minimal(std::vector<Mono> gens) {
  std::set<Mono> uniq(gens.begin(), gens.end());
  std::vector<Mono> all(uniq.begin(), uniq.end()), out;
  for (const auto& g : all) {
    bool dominated = false;
    for (const auto& h : all) {
      if (h != g && divides(h, g)) dominated = true;
    }
    if (!dominated) out.push_back(g);
  }
  return out;
}

// I^k by k-1 rounds of all pairwise products.
inline std::vector<Mono> power(const std::vector<Mono>& gens, int k) {
  std::vector<Mono> acc = minimal(gens);
  for (int r = 1; r < k; ++r) {
    std::vector<Mono> next;
    for (const auto& a : acc) {
      for (const auto& g : gens) {
        Mono p(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + g[i];
        next.push_back(p);
      }
    }
    acc = minimal(next);
  }
  return acc;
}

// Socle monomials of S/I for Artinian I: u not in I with u*x_i in I for all i.
inline std::uint64_t socle(const std::vector<Mono>& gens) {
  const std::size_t n = gens.front().size();
  Mono bound(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  }
  std::uint64_t count = 0;
  Mono u(n, 0);
  while (true) {
    if (!member(u, gens)) {
      bool all = true;
      for (std::size_t i = 0; i < n && all; ++i) {
        Mono v = u;
        ++v[i];
        all = member(v, gens);
      }
      if (all) ++count;
    }
    std::size_t i = 0;
    while (i < n && u[i] == bound[i]) u[i++] = 0;
    if (i == n) break;
    ++u[i];
  }
  return count;
}

// Pascal's rule, no library binomials.
inline mpz_class choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<mpz_class> row{1};
  for (long r = 1; r <= n; ++r) {
    std::vector<mpz_class> next(static_cast<std::size_t>(r) + 1, 1);
    for (long j = 1; j < r; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Betti numbers of S/I^k for I generated by a regular sequence of length n.
inline std::vector<mpz_class> eagon_northcott(long n, long k) {
  std::vector<mpz_class> b{1};
  for (long i = 1; i <= n; ++i) b.push_back(choose(k + n - 1, n - i) * choose(k - 2 + i, i - 1));
  return b;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Rank over F_p by elimination on residues.
inline std::size_t modular_rank(std::vector<std::vector<long long>> m, long long p) {
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  auto inv = [p](long long a) {
    long long r = 1, e = p - 2, b = a;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long f = m[r][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle

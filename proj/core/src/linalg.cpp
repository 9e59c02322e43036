#include <algorithm>
#include <cctype>
#include <charconv>

#include "powerbetti/errors.hpp"
#include "powerbetti/exact.hpp"
#include "powerbetti/resolution.hpp"

namespace powerbetti {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Fraction-free elimination; every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact.
template <typename T, typename Mul, typename Sub>
std::size_t bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols, Mul mul, Sub sub) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const T p = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        T v = sub(mul(p, at(i, j)), mul(f, at(rank, j)));
        v /= prev;
        at(i, j) = v;
      }
      at(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::int64_t v = m(r, c) % static_cast<std::int64_t>(p);
      a[r * cols + c] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::uint64_t inv = inverse(at(rank, c));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t f = at(i, c) * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        at(i, j) = (at(i, j) + (p - f) * at(rank, j)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CoefficientField CoefficientField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw DomainError("characteristic must be below 2^31");
  return CoefficientField(Kind::prime, p);
}

CoefficientField CoefficientField::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "0" || text == "QQ") return rational();
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == 'p' || digits.front() == 'P')) digits.remove_prefix(1);
  std::uint32_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw DomainError("unrecognized field '" + std::string(text) + "' (use q or a prime)");
  }
  return prime(p);
}

std::string CoefficientField::name() const {
  return kind_ == Kind::rational ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::size_t exact_rank(const IntMatrix& m, const CoefficientField& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (field.kind() == CoefficientField::Kind::prime) return rank_mod_p(m, field.characteristic());

  std::vector<std::int64_t> small(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) small[r * m.cols() + c] = m(r, c);
  }
  try {
    return bareiss_rank(std::move(small), m.rows(), m.cols(), checked_mul, checked_sub);
  } catch (const Overflow&) {
    std::vector<BigInt> big(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        big[r * m.cols() + c] = static_cast<long>(m(r, c));
      }
    }
    return bareiss_rank(
        std::move(big), m.rows(), m.cols(),
        [](const BigInt& a, const BigInt& b) -> BigInt { return a * b; },
        [](const BigInt& a, const BigInt& b) -> BigInt { return a - b; });
  }
}

}  // namespace powerbetti

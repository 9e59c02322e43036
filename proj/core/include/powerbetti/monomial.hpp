#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace powerbetti {

using Exponent = std::uint32_t;

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}. The length is fixed
// at construction.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t num_variables) : e_(num_variables, 0) {}
  explicit ExponentVector(std::vector<Exponent> entries) : e_(std::move(entries)) {}
  ExponentVector(std::initializer_list<Exponent> entries) : e_(entries) {}

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  std::span<const Exponent> entries() const noexcept { return e_; }

  std::uint64_t total_degree() const noexcept;
  bool is_zero() const noexcept;
  // Number of variables with a positive exponent.
  std::size_t support_size() const noexcept;

  // Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const ExponentVector& other) const noexcept;

  // x^this * x_i^delta, entries floored at zero.
  ExponentVector shifted(std::size_t i, int delta) const;

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> e_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

// "a:b:c" rendering used by the CSV writers.
std::string colon_joined(const ExponentVector& v);

// Unique antichain generating the same monomial ideal; output is a subset of
// the input, sorted by total degree and then lexicographically descending.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);

// A monomial ideal given by its minimal generators. The unit ideal is
// representable (it arises as a colon ideal) but never accepted as input.
class MonomialIdeal {
 public:
  MonomialIdeal(std::vector<std::string> variables, std::vector<ExponentVector> generators);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  std::size_t num_generators() const noexcept { return generators_.size(); }

  bool is_unit() const noexcept;
  bool contains(const ExponentVector& monomial) const noexcept;
  bool contains(const MonomialIdeal& other) const noexcept;

  // "x^2*y" using this ideal's variable names; "1" for the zero vector.
  std::string format_monomial(const ExponentVector& monomial) const;
  // Text accepted by parse_ideal.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.variables_ == b.variables_ && a.generators_ == b.generators_;
  }

 private:
  std::vector<std::string> variables_;
  std::vector<ExponentVector> generators_;
};

// Grammar: "vars:" name+ ";" "gens:" monomial ("," monomial)*, with
// monomial := factor ("*" factor)* and factor := name ("^" positive-int)?.
// '#' starts a comment that runs to the end of the line.
MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal load_ideal_file(const std::string& path);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);

// I^k from all multisets of k generators, minimalized. Cost grows as
// C(m+k-1, k) products; this is the hot spot for large powers.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t variable);
// (I : m), the intersection of the colons by every variable.
MonomialIdeal colon_by_maximal(const MonomialIdeal& ideal);

bool is_artinian(const MonomialIdeal& ideal);

// Number of monomials in (I : m) \ I. Requires an Artinian ideal.
std::uint64_t socle_dimension(const MonomialIdeal& ideal);

struct DegreeProfile {
  bool is_single_degree = false;
  std::optional<std::uint64_t> degree;
};
DegreeProfile generator_degree_profile(const MonomialIdeal& ideal);

// Minimal generators with pairwise disjoint supports form a regular sequence;
// returns its length, or nullopt when the generators share a variable.
std::optional<std::size_t> regular_sequence_length(const MonomialIdeal& ideal);

}  // namespace powerbetti

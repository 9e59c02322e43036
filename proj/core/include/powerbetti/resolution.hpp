#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powerbetti/monomial.hpp"

namespace powerbetti {

// Coefficient field of the polynomial ring: the rationals or F_p.
class CoefficientField {
 public:
  enum class Kind { rational, prime };

  static CoefficientField rational() { return CoefficientField(Kind::rational, 0); }
  // Throws DomainError unless p is prime.
  static CoefficientField prime(std::uint32_t p);
  // "q" / "Q" / "0" for the rationals, a prime number (optionally "p7") for F_p.
  static CoefficientField parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  // "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  CoefficientField(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

// Dense integer matrix with small entries, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> data_;
};

// Exact rank. Over Q: fraction-free (Bareiss) elimination, machine integers
// with overflow detection and a GMP fallback. Over F_p: elimination mod p.
std::size_t exact_rank(const IntMatrix& m, const CoefficientField& field);

// Downward-closed family of subsets of {0..n-1}, stored by its facets as
// bitmasks. The void complex has no faces at all; {∅} is a distinct complex.
class SimplicialComplex {
 public:
  using Face = std::uint32_t;

  static constexpr std::size_t kMaxVertices = 24;

  explicit SimplicialComplex(std::size_t vertex_count, std::vector<Face> generating_faces = {});

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains(Face face) const noexcept;
  // Some vertex lies in every facet.
  bool is_cone() const noexcept;
  // All faces with `dim + 1` vertices, ascending as bitmasks.
  std::vector<Face> faces_of_dimension(int dim) const;
  std::vector<Face> all_faces() const;

 private:
  std::size_t n_;
  std::vector<Face> facets_;
};

// Reduced homology dimensions, index 0 holding H~_{-1} and index j+1 holding
// H~_j, for j up to n-1.
std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplex& complex,
                                                 const CoefficientField& field);

struct ResolutionLimits {
  std::size_t max_lattice_size = std::size_t{1} << 20;
  std::size_t max_taylor_generators = 16;
};

// Join-closure of the generators under componentwise max, sorted.
std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal,
                                        const ResolutionLimits& limits = {});

// K^a(I) = { squarefree σ : x^{a-σ} ∈ I }, σ restricted to the support of a.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a);

struct BettiTable {
  std::string ideal;
  CoefficientField field = CoefficientField::rational();
  // (i, a) -> beta_{i,a}(S/I), nonzero entries only; includes beta_{0,0} = 1.
  std::map<std::pair<int, ExponentVector>, std::uint64_t> entries;
  // beta_0 .. beta_n.
  std::vector<std::uint64_t> totals;

  std::uint64_t beta(int i, const ExponentVector& a) const;
};

// Multigraded Betti numbers of S/I via upper Koszul complexes over the lcm
// lattice.
BettiTable betti_table(const MonomialIdeal& ideal, const CoefficientField& field,
                       const ResolutionLimits& limits = {});

// Total Betti numbers beta_0..beta_n of S/I from the Taylor complex tensored
// with the residue field. Independent of betti_table.
std::vector<std::uint64_t> taylor_betti(const MonomialIdeal& ideal, const CoefficientField& field,
                                        const ResolutionLimits& limits = {});

// CSV: header "i,multidegree,degree,beta", one row per nonzero entry, then a
// totals row per i with multidegree and degree "*".
void write_betti_csv(std::ostream& out, const BettiTable& table);

}  // namespace powerbetti

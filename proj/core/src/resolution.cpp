#include <algorithm>
#include <bit>
#include <cstring>

#include "powerbetti/errors.hpp"
#include "powerbetti/resolution.hpp"

namespace powerbetti {
namespace {

// Set of equal-length exponent vectors in one flat buffer, with open
// addressing over indices into that buffer.
class FlatVectorSet {
 public:
  explicit FlatVectorSet(std::size_t width) : width_(width), slots_(1024, kEmpty) {}

  std::size_t size() const noexcept { return count_; }
  const Exponent* at(std::size_t index) const noexcept { return data_.data() + index * width_; }
  const std::vector<Exponent>& data() const noexcept { return data_; }

  // Returns true if the vector was new.
  bool insert(const Exponent* v) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t slot = hash(v) & (slots_.size() - 1);
    while (slots_[slot] != kEmpty) {
      if (std::memcmp(at(slots_[slot]), v, width_ * sizeof(Exponent)) == 0) return false;
      slot = (slot + 1) & (slots_.size() - 1);
    }
    slots_[slot] = count_;
    data_.insert(data_.end(), v, v + width_);
    ++count_;
    return true;
  }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

  std::size_t hash(const Exponent* v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < width_; ++i) {
      h ^= v[i];
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  void grow() {
    std::vector<std::size_t> next(slots_.size() * 2, kEmpty);
    for (std::size_t idx = 0; idx < count_; ++idx) {
      std::size_t slot = hash(at(idx)) & (next.size() - 1);
      while (next[slot] != kEmpty) slot = (slot + 1) & (next.size() - 1);
      next[slot] = idx;
    }
    slots_ = std::move(next);
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Exponent> data_;
  std::vector<std::size_t> slots_;
};

FlatVectorSet lattice_closure(const MonomialIdeal& ideal, std::size_t cap) {
  const std::size_t n = ideal.num_variables();
  const auto& gens = ideal.generators();
  FlatVectorSet set(n);
  for (const auto& g : gens) set.insert(g.entries().data());
  if (set.size() > cap) {
    throw ResourceError("lcm lattice exceeds cap of " + std::to_string(cap) + " elements");
  }

  // Every join of generators is reached by joining one generator at a time.
  std::vector<Exponent> join(n), x(n);
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    std::copy_n(set.at(idx), n, x.begin());
    for (const auto& g : gens) {
      bool changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        join[i] = std::max(x[i], g[i]);
        changed |= join[i] != x[i];
      }
      if (!changed) continue;
      if (set.insert(join.data()) && set.size() > cap) {
        throw ResourceError("lcm lattice exceeds cap of " + std::to_string(cap) + " elements");
      }
    }
  }
  return set;
}

// Facets of K^a(I): supp(a) minus the coordinates where a divisor g of x^a
// is tight (g_i = a_i). Empty when no generator divides x^a.
std::vector<SimplicialComplex::Face> upper_koszul_facets(const MonomialIdeal& ideal,
                                                         const Exponent* a) {
  const std::size_t n = ideal.num_variables();
  SimplicialComplex::Face support = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) support |= SimplicialComplex::Face{1} << i;
  }
  std::vector<SimplicialComplex::Face> facets;
  for (const auto& g : ideal.generators()) {
    SimplicialComplex::Face tight = 0;
    bool divides = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > a[i]) {
        divides = false;
        break;
      }
      if (g[i] == a[i]) tight |= SimplicialComplex::Face{1} << i;
    }
    if (divides) facets.push_back(support & ~tight);
  }
  return facets;
}

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DomainError("Betti numbers require a proper ideal");
  if (ideal.num_variables() > SimplicialComplex::kMaxVertices) {
    throw ResourceError("at most " + std::to_string(SimplicialComplex::kMaxVertices) +
                        " variables are supported");
  }
}

}  // namespace

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal, const ResolutionLimits& limits) {
  const std::size_t n = ideal.num_variables();
  const FlatVectorSet set = lattice_closure(ideal, limits.max_lattice_size);
  std::vector<ExponentVector> out;
  out.reserve(set.size());
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    out.emplace_back(std::vector<Exponent>(set.at(idx), set.at(idx) + n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (a.size() != ideal.num_variables()) throw DomainError("multidegree length mismatch");
  SimplicialComplex complex(ideal.num_variables(), upper_koszul_facets(ideal, a.entries().data()));
  return complex;
}

std::uint64_t BettiTable::beta(int i, const ExponentVector& a) const {
  const auto it = entries.find({i, a});
  return it == entries.end() ? 0 : it->second;
}

BettiTable betti_table(const MonomialIdeal& ideal, const CoefficientField& field,
                       const ResolutionLimits& limits) {
  require_proper(ideal);
  const std::size_t n = ideal.num_variables();
  BettiTable table;
  table.ideal = ideal.to_string();
  table.field = field;
  table.totals.assign(n + 1, 0);
  table.totals[0] = 1;
  table.entries[{0, ExponentVector(n)}] = 1;

  const FlatVectorSet lattice = lattice_closure(ideal, limits.max_lattice_size);
  // Many multidegrees share a complex; homology depends only on the facets.
  std::map<std::vector<SimplicialComplex::Face>, std::vector<std::uint64_t>> cache;

  for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
    const Exponent* a = lattice.at(idx);
    auto facets = upper_koszul_facets(ideal, a);
    SimplicialComplex::Face common = ~SimplicialComplex::Face{0};
    for (auto f : facets) common &= f;
    if (facets.empty() || common != 0) continue;  // cone: acyclic

    const SimplicialComplex complex(n, std::move(facets));
    auto [it, inserted] = cache.try_emplace(complex.facets());
    if (inserted) it->second = reduced_homology_dims(complex, field);
    const auto& dims = it->second;

    for (std::size_t j = 0; j < dims.size(); ++j) {
      if (dims[j] == 0) continue;
      const std::size_t i = j + 1;  // beta_{i,a}(S/I) = dim H~_{i-2}(K^a)
      if (i > n) throw InvariantViolation("betti_support", "homology above projective dimension bound");
      table.entries[{static_cast<int>(i), ExponentVector(std::vector<Exponent>(a, a + n))}] = dims[j];
      table.totals[i] += dims[j];
    }
  }
  return table;
}

void write_betti_csv(std::ostream& out, const BettiTable& table) {
  out << "i,multidegree,degree,beta\n";
  for (const auto& [key, beta] : table.entries) {
    out << key.first << ',' << colon_joined(key.second) << ',' << key.second.total_degree() << ','
        << beta << '\n';
  }
  for (std::size_t i = 0; i < table.totals.size(); ++i) {
    out << i << ",*,*," << table.totals[i] << '\n';
  }
}

}  // namespace powerbetti

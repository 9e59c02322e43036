#include "powerbetti/monomial.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "powerbetti/errors.hpp"

namespace powerbetti {

std::uint64_t ExponentVector::total_degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

std::size_t ExponentVector::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(e_.begin(), e_.end(), [](Exponent x) { return x != 0; }));
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::shifted(std::size_t i, int delta) const {
  ExponentVector r = *this;
  const long long v = static_cast<long long>(r.e_[i]) + delta;
  r.e_[i] = v < 0 ? 0 : static_cast<Exponent>(v);
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
  return r;
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent x : v.entries()) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string colon_joined(const ExponentVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(v[i]);
  }
  return out;
}

namespace {

bool degree_then_lex_desc(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a > b;
}

}  // namespace

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), degree_then_lex_desc);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor has total degree <= the multiple, so it is already kept.
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables,
                             std::vector<ExponentVector> generators)
    : variables_(std::move(variables)) {
  if (generators.empty()) throw DomainError("monomial ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != variables_.size()) {
      throw DomainError("generator length " + std::to_string(g.size()) +
                        " does not match variable count " + std::to_string(variables_.size()));
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v + "'");
  }
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_unit() const noexcept {
  return generators_.size() == 1 && generators_.front().is_zero();
}

bool MonomialIdeal::contains(const ExponentVector& monomial) const noexcept {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return g.divides(monomial); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const noexcept {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

std::string MonomialIdeal::format_monomial(const ExponentVector& monomial) const {
  std::string out;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (monomial[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[i];
    if (monomial[i] > 1) out += '^' + std::to_string(monomial[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "vars:";
  for (const auto& v : variables_) out += ' ' + v;
  out += "; gens: ";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(generators_[i]);
  }
  return out;
}

MonomialIdeal load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<ExponentVector> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal(a.variables(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<ExponentVector> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.variables(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw DomainError("power exponent must be >= 1, got " + std::to_string(k));
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  std::unordered_set<ExponentVector, ExponentVectorHash> products;

  // Multisets of size k as non-decreasing index sequences.
  std::vector<ExponentVector> partial(static_cast<std::size_t>(k) + 1,
                                      ExponentVector(ideal.num_variables()));
  auto recurse = [&](auto&& self, int depth, std::size_t start) -> void {
    if (depth == k) {
      products.insert(partial[static_cast<std::size_t>(depth)]);
      return;
    }
    for (std::size_t j = start; j < m; ++j) {
      partial[static_cast<std::size_t>(depth) + 1] = partial[static_cast<std::size_t>(depth)] * gens[j];
      self(self, depth + 1, j);
    }
  };
  recurse(recurse, 0, 0);
  return MonomialIdeal(ideal.variables(), {products.begin(), products.end()});
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t variable) {
  if (variable >= ideal.num_variables()) throw DomainError("variable index out of range");
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(g.shifted(variable, -1));
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal colon_by_maximal(const MonomialIdeal& ideal) {
  MonomialIdeal result = colon_by_variable(ideal, 0);
  for (std::size_t i = 1; i < ideal.num_variables(); ++i) {
    result = intersection(result, colon_by_variable(ideal, i));
  }
  return result;
}

bool is_artinian(const MonomialIdeal& ideal) {
  std::vector<bool> has_pure_power(ideal.num_variables(), false);
  for (const auto& g : ideal.generators()) {
    if (g.support_size() != 1) continue;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != 0) has_pure_power[i] = true;
    }
  }
  return std::all_of(has_pure_power.begin(), has_pure_power.end(), [](bool b) { return b; });
}

std::uint64_t socle_dimension(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) throw DomainError("socle_dimension requires an Artinian ideal");
  const std::size_t n = ideal.num_variables();
  if (ideal.is_unit()) return 0;

  // Standard monomials have x_i-exponent below the smallest pure power of x_i.
  std::vector<Exponent> bound(n, 0);
  for (const auto& g : ideal.generators()) {
    if (g.support_size() != 1) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != 0 && (bound[i] == 0 || g[i] < bound[i])) bound[i] = g[i];
    }
  }

  const MonomialIdeal colon = colon_by_maximal(ideal);
  std::uint64_t count = 0;
  std::vector<Exponent> e(n, 0);
  while (true) {
    const ExponentVector u(e);
    if (colon.contains(u) && !ideal.contains(u)) ++count;
    std::size_t i = 0;
    while (i < n && ++e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
  }
  return count;
}

DegreeProfile generator_degree_profile(const MonomialIdeal& ideal) {
  const auto d = ideal.generators().front().total_degree();
  for (const auto& g : ideal.generators()) {
    if (g.total_degree() != d) return {false, std::nullopt};
  }
  return {true, d};
}

std::optional<std::size_t> regular_sequence_length(const MonomialIdeal& ideal) {
  std::vector<bool> used(ideal.num_variables(), false);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (used[i]) return std::nullopt;
      used[i] = true;
    }
  }
  return ideal.num_generators();
}

}  // namespace powerbetti

#include <algorithm>
#include <bit>

#include "powerbetti/errors.hpp"
#include "powerbetti/resolution.hpp"

namespace powerbetti {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Face> generating_faces)
    : n_(vertex_count) {
  if (n_ > kMaxVertices) {
    throw ResourceError("simplicial complex on " + std::to_string(n_) + " vertices exceeds " +
                        std::to_string(kMaxVertices));
  }
  const Face all = n_ == 0 ? 0 : static_cast<Face>((std::uint64_t{1} << n_) - 1);
  for (Face f : generating_faces) {
    if ((f & ~all) != 0) throw DomainError("face uses a vertex outside the vertex set");
  }
  std::sort(generating_faces.begin(), generating_faces.end());
  generating_faces.erase(std::unique(generating_faces.begin(), generating_faces.end()),
                         generating_faces.end());
  // Keep only maximal faces; larger popcount first so subsets are dropped.
  std::stable_sort(generating_faces.begin(), generating_faces.end(),
                   [](Face a, Face b) { return std::popcount(a) > std::popcount(b); });
  for (Face f : generating_faces) {
    const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                     [f](Face g) { return (f & g) == f; });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
}

bool SimplicialComplex::contains(Face face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [face](Face g) { return (face & g) == face; });
}

bool SimplicialComplex::is_cone() const noexcept {
  if (facets_.empty()) return false;
  Face common = facets_.front();
  for (Face f : facets_) common &= f;
  return common != 0;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::all_faces() const {
  std::vector<Face> faces;
  for (Face f : facets_) {
    // Every submask of f, including f and the empty face.
    Face s = f;
    while (true) {
      faces.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::faces_of_dimension(int dim) const {
  std::vector<Face> out;
  for (Face f : all_faces()) {
    if (std::popcount(f) == dim + 1) out.push_back(f);
  }
  return out;
}

std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplex& complex,
                                                 const CoefficientField& field) {
  const std::size_t n = complex.vertex_count();
  std::vector<std::uint64_t> dims(n + 1, 0);
  if (complex.is_void()) return dims;

  // by_size[s] = faces with s vertices, i.e. dimension s-1.
  std::vector<std::vector<SimplicialComplex::Face>> by_size(n + 2);
  for (auto f : complex.all_faces()) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // rank_of[s] = rank of the boundary from faces of size s to faces of size s-1.
  std::vector<std::size_t> rank_of(n + 2, 0);
  for (std::size_t s = 1; s <= n; ++s) {
    const auto& cols = by_size[s];
    const auto& rows = by_size[s - 1];
    if (cols.empty() || rows.empty()) continue;
    IntMatrix d(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto face = cols[c];
      int t = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const SimplicialComplex::Face bit = SimplicialComplex::Face{1} << v;
        if (!(face & bit)) continue;
        const auto it = std::lower_bound(rows.begin(), rows.end(), face & ~bit);
        d(static_cast<std::size_t>(it - rows.begin()), c) = (t % 2 == 0) ? 1 : -1;
        ++t;
      }
    }
    rank_of[s] = exact_rank(d, field);
  }
  for (std::size_t s = 0; s <= n; ++s) {
    const std::uint64_t c = by_size[s].size();
    dims[s] = c - rank_of[s] - rank_of[s + 1];
  }
  return dims;
}

}  // namespace powerbetti

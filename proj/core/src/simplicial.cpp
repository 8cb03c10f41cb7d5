#include "sgcm/simplicial.hpp"

#include "sgcm/error.hpp"
#include "sgcm/lattice.hpp"
#include "sgcm/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sgcm {
namespace {

void check_vertex_budget(VertexSet vertices) {
  if (std::bit_width(vertices) > kMaxComplexVertices)
    throw InputError("simplicial complex: at most " + std::to_string(kMaxComplexVertices) +
                     " vertices supported");
}

// Rank of the boundary map from dimension q to q - 1 over the field.
std::size_t boundary_rank(const SimplicialComplex& k, int q, const FieldSpec& field) {
  if (q < 0) return 0;
  const std::vector<VertexSet> rows = k.faces_of_dimension(q);
  const std::vector<VertexSet> cols = k.faces_of_dimension(q - 1);
  if (rows.empty() || cols.empty()) return 0;

  auto column_of = [&](VertexSet f) {
    const auto it = std::lower_bound(cols.begin(), cols.end(), f, canonical_less);
    return static_cast<std::size_t>(it - cols.begin());
  };

  if (field.is_rational()) {
    IntMatrix d(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int sign = 1;
      for (std::size_t v : vertex_list(rows[i])) {
        d(i, column_of(rows[i] & ~(VertexSet{1} << (v - 1)))) = sign;
        sign = -sign;
      }
    }
    return rational_rank(d);
  }

  const std::uint64_t p = field.characteristic();
  std::vector<std::vector<std::uint64_t>> d(rows.size(), std::vector<std::uint64_t>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool plus = true;
    for (std::size_t v : vertex_list(rows[i])) {
      d[i][column_of(rows[i] & ~(VertexSet{1} << (v - 1)))] = plus ? 1 : p - 1;
      plus = !plus;
    }
  }
  auto power = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && d[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(d[piv], d[rank]);
    const std::uint64_t inv = power(d[rank][c], p - 2);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (d[i][c] == 0) continue;
      const std::uint64_t f = d[i][c] * inv % p;
      for (std::size_t j = c; j < cols.size(); ++j)
        d[i][j] = (d[i][j] + (p - f) * d[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t vertex_count(VertexSet v) { return static_cast<std::size_t>(std::popcount(v)); }

std::vector<std::size_t> vertex_list(VertexSet v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; v; ++k, v >>= 1)
    if (v & 1) out.push_back(k + 1);
  return out;
}

VertexSet vertex_set(const std::vector<std::size_t>& labels) {
  VertexSet v = 0;
  for (std::size_t l : labels) {
    if (l == 0 || l > kMaxComplexVertices)
      throw InputError("vertex label " + std::to_string(l) + " out of range");
    v |= VertexSet{1} << (l - 1);
  }
  return v;
}

std::string to_string(VertexSet v) {
  std::string out = "{";
  for (std::size_t l : vertex_list(v)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(l);
  }
  return out + "}";
}

bool canonical_less(VertexSet a, VertexSet b) {
  const std::size_t ca = vertex_count(a), cb = vertex_count(b);
  if (ca != cb) return ca < cb;
  return vertex_list(a) < vertex_list(b);
}

SimplicialComplex SimplicialComplex::closure(VertexSet vertices,
                                             const std::vector<VertexSet>& generating) {
  check_vertex_budget(vertices);
  std::set<VertexSet> faces;
  for (VertexSet g : generating) {
    if (g & ~vertices) throw InputError("face " + to_string(g) + " leaves the vertex set");
    for (VertexSet sub = g; sub; sub = (sub - 1) & g) faces.insert(sub);
  }
  SimplicialComplex k;
  k.vertices_ = vertices;
  k.faces_.assign(faces.begin(), faces.end());
  std::sort(k.faces_.begin(), k.faces_.end(), canonical_less);
  return k;
}

SimplicialComplex SimplicialComplex::from_faces(VertexSet vertices, std::vector<VertexSet> faces) {
  SimplicialComplex k = closure(vertices, faces);
  std::sort(faces.begin(), faces.end(), canonical_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (std::find(faces.begin(), faces.end(), VertexSet{0}) != faces.end())
    throw InputError("the empty set is not listed as a face");
  if (faces != k.faces_) throw InputError("face list is not closed under taking subsets");
  return k;
}

SimplicialComplex SimplicialComplex::simplex(VertexSet vertices) {
  return closure(vertices, {vertices});
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, canonical_less);
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -1 : static_cast<int>(vertex_count(faces_.back())) - 1;
}

std::vector<VertexSet> SimplicialComplex::faces_of_dimension(int q) const {
  if (q == -1) return {0};
  std::vector<VertexSet> out;
  for (VertexSet f : faces_)
    if (static_cast<int>(vertex_count(f)) == q + 1) out.push_back(f);
  return out;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  bool prime = p >= 2 && p < (std::uint64_t{1} << 31);
  for (std::uint64_t d = 2; prime && d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "rational" : "fp:" + std::to_string(p_);
}

SimplicialComplex build_pi_S(const AffineSemigroup& s) {
  const std::size_t m = s.num_facets();
  if (m > kMaxComplexVertices)
    throw UnsupportedError("pi(S): " + std::to_string(m) + " facets exceed the supported " +
                           std::to_string(kMaxComplexVertices));
  std::vector<VertexSet> zero_sets(s.num_generators(), 0);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g : s.facet_generators(f)) zero_sets[g] |= VertexSet{1} << f;
  const VertexSet all = m == 0 ? 0 : static_cast<VertexSet>((std::uint64_t{1} << m) - 1);
  return SimplicialComplex::closure(all, zero_sets);
}

std::vector<VertexSet> non_faces(const SimplicialComplex& k, std::size_t max_size) {
  std::vector<VertexSet> out;
  const VertexSet all = k.vertices();
  for (VertexSet j = all; j; j = (j - 1) & all)
    if (vertex_count(j) <= max_size && !k.contains(j)) out.push_back(j);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SimplicialComplex restrict(const SimplicialComplex& k, VertexSet j) {
  if (j == 0) throw InputError("restrict: empty vertex subset");
  if (j & ~k.vertices()) throw InputError("restrict: " + to_string(j) + " leaves the vertex set");
  std::vector<VertexSet> inside;
  for (VertexSet f : k.faces())
    if ((f & ~j) == 0) inside.push_back(f);
  return SimplicialComplex::from_faces(j, std::move(inside));
}

std::size_t reduced_betti(const SimplicialComplex& k, int q, const FieldSpec& field) {
  if (q < -1 || q > k.dimension() + 1) return 0;
  const std::size_t chains = k.faces_of_dimension(q).size();
  if (chains == 0) return 0;
  return chains - boundary_rank(k, q, field) - boundary_rank(k, q + 1, field);
}

std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& k,
                                               const FieldSpec& field) {
  std::vector<std::size_t> out;
  for (int q = -1; q <= std::max(k.dimension(), -1); ++q) out.push_back(reduced_betti(k, q, field));
  return out;
}

}  // namespace sgcm

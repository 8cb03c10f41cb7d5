#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sgcm {

class AffineSemigroup;

/// Vertex subset as a bitmask; bit k is vertex k + 1.
using VertexSet = std::uint32_t;

inline constexpr std::size_t kMaxComplexVertices = 20;

std::size_t vertex_count(VertexSet v);
/// 1-based vertex labels in increasing order.
std::vector<std::size_t> vertex_list(VertexSet v);
VertexSet vertex_set(const std::vector<std::size_t>& labels);
/// "{1,3}"; the empty set is "{}".
std::string to_string(VertexSet v);
/// Order by size, then lexicographically on the sorted label lists.
bool canonical_less(VertexSet a, VertexSet b);

/// Finite abstract simplicial complex on a labelled vertex set. Faces are the
/// nonempty vertex subsets; the empty face is implicit and only enters through
/// the augmented chain complex. A complex with no faces at all is allowed.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `generating` on `vertices`. Throws InputError when a
  /// face leaves the vertex set or there are more than kMaxComplexVertices.
  static SimplicialComplex closure(VertexSet vertices, const std::vector<VertexSet>& generating);
  /// The faces must already be downward closed; throws InputError otherwise.
  static SimplicialComplex from_faces(VertexSet vertices, std::vector<VertexSet> faces);
  /// All nonempty subsets of `vertices`.
  static SimplicialComplex simplex(VertexSet vertices);

  VertexSet vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertex_count(vertices_); }
  /// Faces in canonical order.
  const std::vector<VertexSet>& faces() const { return faces_; }
  bool contains(VertexSet face) const;
  bool empty() const { return faces_.empty(); }
  /// Largest face size minus one; -1 for the empty complex.
  int dimension() const;
  /// Faces of dimension q (q + 1 vertices), canonical order. q = -1 gives {0}.
  std::vector<VertexSet> faces_of_dimension(int q) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  VertexSet vertices_ = 0;
  std::vector<VertexSet> faces_;
};

/// Coefficient field for homology: Q or F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  /// "rational" or "fp:<p>".
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// J is a face iff some generator vanishes on every facet functional in J.
SimplicialComplex build_pi_S(const AffineSemigroup& s);

/// Nonempty J inside the vertex set with J not a face and #J <= max_size.
std::vector<VertexSet> non_faces(const SimplicialComplex& k, std::size_t max_size);

/// Faces of K contained in J, on vertex set J. Throws InputError for empty J.
SimplicialComplex restrict(const SimplicialComplex& k, VertexSet j);

/// Dimension of reduced homology in degree q over the field, using the
/// augmented chain complex. The empty complex has one class in degree -1.
std::size_t reduced_betti(const SimplicialComplex& k, int q, const FieldSpec& field);

/// reduced_betti for q = -1 .. max(dimension, -1); index q + 1.
std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& k, const FieldSpec& field);

}  // namespace sgcm

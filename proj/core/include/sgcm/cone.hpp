#pragma once

#include "sgcm/int_matrix.hpp"
#include "sgcm/lattice.hpp"

#include <cstddef>
#include <vector>

namespace sgcm {

/// Largest ambient dimension accepted by the cone routines.
inline constexpr std::size_t kMaxAmbientDim = 12;

/// Output of the double description method for {a : C a >= 0}.
struct DualDescription {
  std::vector<IntVector> rays;       ///< primitive extreme rays, modulo lineality
  std::vector<IntVector> lineality;  ///< basis of the lineality space
};

/// Double description (Motzkin) for the cone {a in Q^d : C a >= 0}, where C
/// is `constraints` (one inequality per row, d = constraints.cols()).
/// Constraints are inserted in row order; adjacency uses the combinatorial
/// test on tight sets. Rays are returned sorted lexicographically.
DualDescription extreme_rays(const IntMatrix& constraints);

/// Rational polyhedral cone spanned by a finite set of integer vectors.
///
/// Facet functionals are normalized intrinsically: each one takes the value 1
/// somewhere on the saturated lattice Z^n ∩ span(generators). When the cone is
/// not full dimensional the functional only matters on that span, and the
/// ambient representative is reduced modulo the orthogonal lattice so that it
/// is canonical.
struct PolyCone {
  std::size_t ambient_dim = 0;
  IntMatrix generators;     ///< rows
  IntMatrix facet_normals;  ///< rows, lexicographically increasing
  /// incidence[i] = indices of generators g with facet_normals.row(i) . g == 0
  std::vector<std::vector<std::size_t>> incidence;
  IntMatrix span_basis;     ///< basis of Z^n ∩ span(generators), Hermite form

  std::size_t dimension() const { return span_basis.rows(); }
  std::size_t num_facets() const { return facet_normals.rows(); }
  IntVector facet_values(const IntVector& x) const { return facet_normals * x; }
  bool contains(const IntVector& x) const;
};

/// Facets and incidence of cone(gens). Throws InputError on an empty list, a
/// zero generator or an ambient dimension above kMaxAmbientDim.
PolyCone cone_from_generators(const IntMatrix& gens);

/// True when the cone contains no line.
bool is_pointed(const PolyCone& cone);

/// Sum of the facet functionals; strictly positive on every nonzero point of a
/// pointed cone. Throws UnsupportedError when the cone is not pointed.
IntVector strictly_positive_functional(const PolyCone& cone);

}  // namespace sgcm

#pragma once

#include "sgcm/semigroup.hpp"
#include "sgcm/simplicial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sgcm {

struct CohomologyOptions {
  FieldSpec field = FieldSpec::rationals();
  /// Box half-width B on facet values; defaults to 4 x the largest generator degree.
  std::optional<Integer> bound;
};

/// 4 x max degree of the generators under the degree functional.
Integer default_bound(const AffineSemigroup& s);
/// 3 x max degree of the generators.
Integer default_degree(const AffineSemigroup& s);

/// One non-face J of pi(S) with #J <= m - 2, and the part of G_J seen in the box.
struct ContributionRecord {
  VertexSet j = 0;
  std::vector<std::size_t> betti;  ///< reduced Betti numbers of pi_J, index q + 1
  std::size_t witness_count = 0;   ///< points of G_J in the box
  std::optional<IntVector> witness;  ///< first such point, original coordinates

  std::size_t betti_at(int q) const;
};

enum class LevelVerdict { ZeroExact, ZeroUpToBound, NonzeroUpToBound };
std::string to_string(LevelVerdict v);

struct LevelReport {
  int level = 0;
  LevelVerdict verdict = LevelVerdict::ZeroExact;
  std::vector<std::size_t> contributing;  ///< indices of records with betti_{level-2} != 0
  std::size_t dimension_in_box = 0;       ///< sum of witness_count * betti_{level-2}
  std::optional<IntVector> witness;
  std::optional<VertexSet> witness_set;
};

/// Multigraded decomposition of H^i(k[S']) by non-faces of pi(S), evaluated
/// on the Hochster image of S. Facet labels are those of S.
struct CohomologyReport {
  std::size_t rank = 0;
  std::size_t num_facets = 0;
  Integer bound = 0;
  FieldSpec field = FieldSpec::rationals();
  SimplicialComplex pi;
  std::vector<ContributionRecord> contributions;  ///< canonical J order
  std::vector<LevelReport> levels;                ///< i = 0 .. rank - 1
  std::size_t box_points = 0;
};

/// Every x of G_S with |L_i(x)| <= B for all i is classified exactly by the
/// set of facets i with x in S_i. Vanishing of a level is therefore certified
/// only inside that box unless no candidate J has nonzero Betti number.
CohomologyReport analyze_cohomology(const AffineSemigroup& s, const CohomologyOptions& options = {});

struct GradedPiece {
  std::size_t dimension = 0;
  std::optional<VertexSet> j;  ///< the non-face J with x in G_J, when it counts
};

/// Dimension of the degree-x piece of H^i(k[S']). Throws InputError unless x ∈ G_S.
GradedPiece graded_piece_dimension(const AffineSemigroup& s, int level, const IntVector& x,
                                   const FieldSpec& field = FieldSpec::rationals());

enum class CmKind { CohenMacaulayExact, CohenMacaulayUpToBound, NotCohenMacaulayUpToBound };
std::string to_string(CmKind k);

struct CmVerdict {
  CmKind kind = CmKind::CohenMacaulayExact;
  Integer bound = 0;
  std::optional<int> level;
  std::optional<VertexSet> j;
  std::optional<IntVector> witness;
};

/// Folds levels 2 .. rank - 1 of the report.
CmVerdict cm_verdict(const CohomologyReport& report);
CmVerdict cm_verdict(const AffineSemigroup& s, const CohomologyOptions& options = {});

struct GotoWatanabeReport {
  Integer degree = 0;
  std::vector<IntVector> sprime_minus_s;  ///< S' \ S up to the degree
  CmVerdict cm;
  bool consistent = false;  ///< (S' = S up to degree) == (CM up to bound)
  std::string conclusion;   ///< "consistent" or "inconclusive at bound"
};

/// Compares S = S' against the CM verdict for a toric surface in P^4.
/// Throws InputError "not a toric surface in P4" for other inputs.
GotoWatanabeReport goto_watanabe_check(const AffineSemigroup& s, std::optional<Integer> degree = {},
                                       const CohomologyOptions& options = {});

}  // namespace sgcm

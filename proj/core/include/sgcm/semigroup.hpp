#pragma once

#include "sgcm/cone.hpp"
#include "sgcm/int_matrix.hpp"
#include "sgcm/lattice.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sgcm {

/// A finitely generated subsemigroup S of N^n together with the data derived
/// from its generators: the group G_S, the cone C(S) with its facets, and the
/// degree functional used to bound every enumeration.
///
/// Values are immutable once built and may be shared between threads; the
/// lazily grown reachability tables are guarded internally.
/// G_S modulo the group generated by the generators on one facet, which is
/// Z x (finite part). For lattice coordinates t, the class is t * transform
/// with entry j < moduli.size() read mod moduli[j]; the last entry is exact
/// and is a positive multiple of the facet functional.
struct FacetQuotient {
  IntMatrix transform;
  std::vector<Integer> moduli;
  std::vector<std::size_t> off;       ///< generators not on the facet
  std::vector<IntVector> off_classes;  ///< their classes, same order
};

struct QuotientTable;

class AffineSemigroup {
 public:
  /// Throws InputError on negative entries, zero generators or an empty list,
  /// UnsupportedError when the cone is not pointed.
  static AffineSemigroup build(const IntMatrix& generators);

  const IntMatrix& generators() const { return cone_.generators; }
  std::size_t num_generators() const { return cone_.generators.rows(); }
  std::size_t ambient_dim() const { return cone_.ambient_dim; }
  std::size_t rank() const { return lattice_.rank(); }
  std::size_t num_facets() const { return cone_.num_facets(); }
  const Lattice& lattice() const { return lattice_; }
  const PolyCone& cone() const { return cone_; }
  const IntVector& degree_functional() const { return degree_; }

  Integer degree(const IntVector& x) const { return dot(degree_, x); }
  IntVector facet_values(const IntVector& x) const { return cone_.facet_values(x); }
  /// Row k holds the facet values of generator k (num_generators x num_facets).
  const IntMatrix& generator_facet_values() const { return generator_values_; }
  /// Generators lying on facet i (indices into generators()).
  const std::vector<std::size_t>& facet_generators(std::size_t facet) const {
    return cone_.incidence.at(facet);
  }
  /// Hermite form of the generators on facet i, for solving in their group.
  const HermiteResult& facet_group(std::size_t facet) const { return facet_groups_.at(facet); }
  const FacetQuotient& facet_quotient(std::size_t facet) const { return facet_quotients_.at(facet); }
  QuotientTable& quotient_table(std::size_t facet) const { return *tables_.at(facet); }

  /// Throws InputError when x has the wrong length.
  void check_dimension(const IntVector& x) const;

 private:
  AffineSemigroup() = default;

  PolyCone cone_;
  Lattice lattice_;
  IntVector degree_;
  IntMatrix generator_values_;
  std::vector<HermiteResult> facet_groups_;
  std::vector<FacetQuotient> facet_quotients_;
  std::vector<std::shared_ptr<QuotientTable>> tables_;
};

inline AffineSemigroup build_semigroup(const IntMatrix& generators) {
  return AffineSemigroup::build(generators);
}

enum class Membership { Member, NonMember };

/// Certified answer to a membership query.
///
/// For a Member answer, x + offset == sum_k coefficients[k] * g_k with all
/// coefficients >= 0; offset is zero for membership in S itself and lies in
/// S ∩ F_i for membership in S_i. NonMember answers are exhaustive refutations
/// and carry a short reason. For S' the per-facet answers are kept in `parts`.
struct MembershipAnswer {
  Membership status = Membership::NonMember;
  IntVector offset;
  IntVector coefficients;
  std::string reason;
  std::optional<std::size_t> facet;  ///< refuting facet (S' queries)
  std::vector<MembershipAnswer> parts;

  bool is_member() const { return status == Membership::Member; }
};

/// Exact membership x ∈ S.
MembershipAnswer member_of_S(const AffineSemigroup& s, const IntVector& x);

/// Exact membership in S_i = S - (S ∩ F_i), i.e. x ∈ G_S and x + y ∈ S for
/// some y in the semigroup generated by the generators on facet i.
///
/// Decided exactly: x ∈ S_i iff x - sum c_k g_k lies in the group of the facet
/// generators for some c >= 0 over the generators off the facet, and
/// L_i(x) = sum c_k L_i(g_k) leaves finitely many such c.
MembershipAnswer member_of_Si(const AffineSemigroup& s, std::size_t facet, const IntVector& x);

/// Same decision as member_of_Si without building a certificate and without
/// trying S first.
bool in_localization(const AffineSemigroup& s, std::size_t facet, const IntVector& x);

/// Exact membership in S' = ∩_i S_i over all facets.
MembershipAnswer member_of_Sprime(const AffineSemigroup& s, const IntVector& x);

/// Points x ∈ G_S with lower[i] <= L_i(x) <= upper[i] for every facet i,
/// sorted by (degree, lexicographic). The box must be bounded, which holds for
/// pointed cones because the facet functionals are injective on G_S.
/// Throws UnsupportedError past kMaxBoxPoints points or kMaxBoxNodes partial
/// enumeration states.
inline constexpr std::size_t kMaxBoxPoints = std::size_t{1} << 22;
inline constexpr std::size_t kMaxBoxNodes = std::size_t{1} << 26;
std::vector<IntVector> lattice_points_in_box(const AffineSemigroup& s,
                                             const std::vector<Integer>& lower,
                                             const std::vector<Integer>& upper);

/// G_S ∩ C(S) truncated at degree d, in canonical order.
std::vector<IntVector> saturation_elements_up_to(const AffineSemigroup& s, const Integer& d);

/// Elements of S' \ S of degree <= d, in canonical order.
std::vector<IntVector> sprime_minus_S_up_to(const AffineSemigroup& s, const Integer& d);

struct HochsterTransform {
  IntMatrix map;  ///< L, one facet functional per row (m x n)
  AffineSemigroup image;
};

/// x -> (L_1(x), ..., L_m(x)); maps S isomorphically onto a standard
/// semigroup in N^m. Throws InvariantError if L fails to be injective on G_S.
HochsterTransform hochster_transform(const AffineSemigroup& s);

struct StandardReport {
  bool saturation_in_orthant = false;  ///< C(S) = nonnegative orthant ∩ span
  bool facets_distinct = false;        ///< facet functionals pairwise distinct
  bool facet_ranks = false;            ///< generators on each facet have rank r - 1
  bool standard() const { return saturation_in_orthant && facets_distinct && facet_ranks; }
};

StandardReport is_standard(const AffineSemigroup& s);

struct SemigroupProfile {
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  std::size_t num_facets = 0;
  std::size_t num_generators = 0;
  bool homogeneous = false;  ///< all generators on one affine hyperplane missing 0
  bool is_toric_surface_in_P4 = false;
};

SemigroupProfile classify(const AffineSemigroup& s);

}  // namespace sgcm

#pragma once

#include "sgcm/int_matrix.hpp"
#include "sgcm/integer.hpp"

#include <cstddef>
#include <optional>

namespace sgcm {

struct HermiteResult {
  IntMatrix form;       ///< H, row-style Hermite normal form
  IntMatrix transform;  ///< U, unimodular with H = U * M
  std::size_t rank = 0; ///< number of nonzero rows of H (they come first)
};

/// Row-style Hermite normal form.
///
/// H is in row echelon form, every pivot is positive and every entry above a
/// pivot lies in [0, pivot). Zero rows are collected at the bottom. Pivots are
/// chosen by smallest absolute value, ties broken by lowest row index.
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
  IntMatrix diagonal;  ///< D = U * M * V, with d_1 | d_2 | ... and d_i >= 0
  IntMatrix left;      ///< U, unimodular
  IntMatrix right;     ///< V, unimodular
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in order.
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// Rank over Q, by fraction-free elimination.
std::size_t rational_rank(const IntMatrix& m);

/// Some lambda with lambda * M == target, or nullopt when target is not in
/// the integer row lattice of M.
std::optional<IntVector> solve_left(const IntMatrix& m, const IntVector& target);
/// Same, reusing a precomputed Hermite form of M.
std::optional<IntVector> solve_left(const HermiteResult& hermite, const IntVector& target);

/// Basis (as rows) of the integer left kernel {u in Z^rows : u * M = 0}. The
/// returned lattice is saturated.
IntMatrix left_kernel(const IntMatrix& m);

/// Rows of `m` after discarding zero rows of its Hermite form, i.e. the
/// canonical basis of the row lattice.
IntMatrix lattice_basis(const IntMatrix& m);

/// A full-rank sublattice of Z^n given by a basis in Hermite normal form.
class Lattice {
 public:
  Lattice() = default;
  /// Lattice generated by the rows of `generators`.
  static Lattice generated_by(const IntMatrix& generators);
  /// Z^n intersected with the rational row span of `generators`.
  static Lattice saturated_span(const IntMatrix& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Unique integer coordinates of x in the basis, or nullopt if x is not in
  /// the lattice. Throws InputError on a length mismatch.
  std::optional<IntVector> coordinates(const IntVector& x) const;
  bool contains(const IntVector& x) const { return coordinates(x).has_value(); }
  /// Inverse of coordinates().
  IntVector point(const IntVector& coords) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(std::size_t ambient_dim, IntMatrix basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  std::size_t ambient_dim_ = 0;
  IntMatrix basis_;
};

/// Decision with certificate: coordinates of x in L's basis, or nullopt.
std::optional<IntVector> lattice_membership(const Lattice& lattice, const IntVector& x);

}  // namespace sgcm

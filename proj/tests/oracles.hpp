#pragma once

// Independent reference computations used only by tests. Nothing in here may
// call into the production routine it is used to check.

#include "sgcm/int_matrix.hpp"
#include "sgcm/lattice.hpp"

#include <algorithm>
#include <map>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace sgcm::test {

/// Cofactor vector of n-1 vectors in Q^n: v with v . row_k = 0 for every row.
inline IntVector cofactor_normal(const IntMatrix& rows) {
  const std::size_t n = rows.cols();
  IntVector v(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const Integer minor = determinant(rows.select_cols(cols));
    v[j] = (j % 2 == 0) ? minor : Integer(-minor);
  }
  return v;
}

/// Facets of cone(gens) by brute force: every (r-1)-subset of generators
/// spanning a hyperplane of the span that supports all generators. Each facet
/// is returned as its primitive vector of values on the generators.
inline std::set<IntVector> brute_force_facet_values(const IntMatrix& gens) {
  const std::size_t n = gens.cols();
  const std::size_t k = gens.rows();
  const std::size_t r = rational_rank(gens);
  const IntMatrix perp = left_kernel(gens.transpose());
  std::set<IntVector> facets;
  if (r == 0) return facets;
  std::vector<bool> sel(k, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(r - 1), true);
  do {
    IntMatrix rows(0, n);
    for (std::size_t i = 0; i < k; ++i)
      if (sel[i]) rows.append_row(gens.row(i));
    if (rational_rank(rows) != r - 1) continue;
    for (std::size_t i = 0; i < perp.rows(); ++i) rows.append_row(perp.row(i));
    IntVector normal = cofactor_normal(rows);
    if (is_zero(normal)) continue;
    IntVector values = gens * normal;
    bool has_pos = false, has_neg = false;
    for (const auto& v : values) {
      if (v > 0) has_pos = true;
      if (v < 0) has_neg = true;
    }
    if (has_pos && has_neg) continue;
    if (has_neg)
      for (auto& v : values) v = -v;
    facets.insert(make_primitive(values));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return facets;
}

/// All sums of generators of w-degree <= max_degree, by breadth-first search
/// from 0. Requires w(g) > 0 for every generator.
inline std::set<IntVector> bfs_semigroup_elements(const IntMatrix& gens, const IntVector& w,
                                                  const Integer& max_degree) {
  std::set<IntVector> seen{IntVector(gens.cols())};
  std::vector<IntVector> frontier{IntVector(gens.cols())};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const IntVector& x : frontier)
      for (std::size_t g = 0; g < gens.rows(); ++g) {
        IntVector y = x;
        for (std::size_t j = 0; j < y.size(); ++j) y[j] += gens(g, j);
        if (dot(w, y) > max_degree) continue;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Bounded search for y in the semigroup generated by `face` with
/// w(y) <= bound and x + y in `elements`. `elements` must contain every
/// element of S up to degree w(x) + bound.
inline bool bounded_localization_oracle(const std::set<IntVector>& elements, const IntMatrix& face,
                                        const IntVector& w, const IntVector& x,
                                        const Integer& bound) {
  for (const IntVector& y : bfs_semigroup_elements(face, w, bound)) {
    IntVector z = x;
    for (std::size_t j = 0; j < z.size(); ++j) z[j] += y[j];
    if (elements.count(z)) return true;
  }
  return false;
}

/// Reduced Betti numbers from Smith forms of the augmented boundary matrices.
/// Faces are lists of vertex labels; the list must be downward closed.
/// p == 0 means rationals; otherwise rank mod p counts invariant factors
/// that p does not divide.
inline std::vector<std::size_t> smith_reduced_betti(const std::set<std::vector<int>>& faces,
                                                    std::uint64_t p) {
  std::map<std::size_t, std::vector<std::vector<int>>> by_size;
  by_size[0].push_back({});
  std::size_t top = 0;
  for (const auto& f : faces) {
    by_size[f.size()].push_back(f);
    top = std::max(top, f.size());
  }
  auto rank_of = [&](std::size_t size) -> std::size_t {
    // boundary from faces of `size` vertices to faces of size - 1
    if (size == 0 || !by_size.count(size)) return 0;
    const auto& rows = by_size[size];
    const auto& cols = by_size[size - 1];
    IntMatrix d(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        std::vector<int> sub = rows[i];
        sub.erase(sub.begin() + static_cast<long>(k));
        const auto j = std::find(cols.begin(), cols.end(), sub) - cols.begin();
        d(i, static_cast<std::size_t>(j)) = k % 2 == 0 ? 1 : -1;
      }
    std::size_t r = 0;
    for (const Integer& f : invariant_factors(d))
      if (p == 0 || f % p != 0) ++r;
    return r;
  };
  std::vector<std::size_t> betti;
  for (std::size_t size = 0; size <= std::max<std::size_t>(top, 1); ++size) {
    const std::size_t chains = by_size.count(size) ? by_size[size].size() : 0;
    betti.push_back(chains - rank_of(size) - rank_of(size + 1));
  }
  betti.resize(top + 1);
  return betti;
}

/// Rank by plain elimination: rationals (fraction free) when p == 0, else mod p.
inline std::size_t naive_rank(std::vector<std::vector<long long>> a, std::uint64_t p) {
  const long long mod = static_cast<long long>(p);
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    auto nonzero = [&](long long v) { return p == 0 ? v != 0 : ((v % mod) + mod) % mod != 0; };
    while (piv < a.size() && !nonzero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const long long f = a[r][c], g = a[rank][c];
      for (std::size_t k = 0; k < cols; ++k) {
        long long v = a[r][k] * g - a[rank][k] * f;
        if (p != 0) v %= mod;
        a[r][k] = v;
      }
      if (p == 0) {
        long long common = 0;
        for (long long v : a[r]) common = std::gcd(common, v < 0 ? -v : v);
        if (common > 1)
          for (long long& v : a[r]) v /= common;
      }
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers from ranks of the augmented boundary maps, with
/// entries q = -1 .. top dimension.
inline std::vector<std::size_t> naive_reduced_betti(const std::set<std::vector<int>>& faces,
                                                    std::uint64_t p) {
  std::map<std::size_t, std::vector<std::vector<int>>> by_size;
  by_size[0].push_back({});
  std::size_t top = 0;
  for (const auto& f : faces) {
    by_size[f.size()].push_back(f);
    top = std::max(top, f.size());
  }
  auto rank_of = [&](std::size_t size) -> std::size_t {
    if (size == 0 || !by_size.count(size)) return 0;
    const auto& rows = by_size[size];
    const auto& cols = by_size[size - 1];
    std::vector<std::vector<long long>> d(rows.size(), std::vector<long long>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        std::vector<int> sub = rows[i];
        sub.erase(sub.begin() + static_cast<long>(k));
        const auto j = std::find(cols.begin(), cols.end(), sub) - cols.begin();
        d[i][static_cast<std::size_t>(j)] = k % 2 == 0 ? 1 : -1;
      }
    return naive_rank(d, p);
  };
  std::vector<std::size_t> betti;
  for (std::size_t size = 0; size <= top; ++size)
    betti.push_back(by_size[size].size() - rank_of(size) - rank_of(size + 1));
  return betti;
}

}  // namespace sgcm::test

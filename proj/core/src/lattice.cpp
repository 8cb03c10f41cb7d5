#include "sgcm/lattice.hpp"

#include "sgcm/error.hpp"

#include <utility>

namespace sgcm {
namespace {

// Index of the row in [from, rows) with the smallest nonzero |m(i, col)|,
// lowest index on ties; rows() if the column is zero there.
std::size_t smallest_pivot_row(const IntMatrix& m, std::size_t col, std::size_t from) {
  std::size_t best = m.rows();
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, col) == 0) continue;
    if (best == m.rows() || abs_value(m(i, col)) < abs_value(m(best, col))) best = i;
  }
  return best;
}

std::size_t first_nonzero(std::span<const Integer> row) {
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) return c;
  return row.size();
}

// Coefficients t with t * H_top == target, where H_top are the first `rank`
// rows of a row echelon matrix.
std::optional<IntVector> echelon_solve(const IntMatrix& h, std::size_t rank,
                                       IntVector residual) {
  IntVector t(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::size_t p = first_nonzero(h.row_span(k));
    if (residual[p] % h(k, p) != 0) return std::nullopt;
    t[k] = residual[p] / h(k, p);
    if (t[k] == 0) continue;
    for (std::size_t c = p; c < h.cols(); ++c) residual[c] -= t[k] * h(k, c);
  }
  if (!is_zero(residual)) return std::nullopt;
  return t;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.form;
  IntMatrix& u = res.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (;;) {
      const std::size_t p = smallest_pivot_row(h, col, row);
      if (p == h.rows()) break;
      h.swap_rows(p, row);
      u.swap_rows(p, row);
      bool done = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        const Integer q = h(i, col) / h(row, col);
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      const Integer q = floor_div(h(i, col), h(row, col));
      h.add_row_multiple(i, row, -q);
      u.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  res.rank = row;
  return res;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = res.diagonal;
  IntMatrix& u = res.left;
  IntMatrix& v = res.right;
  const std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < n; ++t) {
    // Smallest |entry| in the trailing block; ties by row, then column.
    auto move_smallest_to_pivot = [&]() -> bool {
      std::size_t bi = d.rows(), bj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) == 0) continue;
          if (bi == d.rows() || abs_value(d(i, j)) < abs_value(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == d.rows()) return false;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);
      return true;
    };
    if (!move_smallest_to_pivot()) break;

    for (;;) {
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
      }
      bool line_clear = true;
      for (std::size_t i = t + 1; i < d.rows() && line_clear; ++i)
        if (d(i, t) != 0) line_clear = false;
      for (std::size_t j = t + 1; j < d.cols() && line_clear; ++j)
        if (d(t, j) != 0) line_clear = false;
      if (!line_clear) {
        // A remainder smaller than the pivot survived; make it the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < d.rows(); ++i)
          if (d(i, t) != 0 && abs_value(d(i, t)) < abs_value(d(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(t, j) != 0 && abs_value(d(t, j)) < abs_value(d(bi, bj))) {
            bi = t;
            bj = j;
          }
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Divisibility: pull a non-divisible row into the pivot row.
      std::size_t bad = d.rows();
      for (std::size_t i = t + 1; i < d.rows() && bad == d.rows(); ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == d.rows()) break;
      d.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const SmithResult s = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.diagonal(i, i) != 0) out.push_back(s.diagonal(i, i));
  return out;
}

std::size_t rational_rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    const Integer pivot = a(rank, col);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const Integer f = a(i, col);
      IntVector r(a.cols());
      for (std::size_t c = 0; c < a.cols(); ++c) r[c] = a(i, c) * pivot - f * a(rank, c);
      a.set_row(i, make_primitive(std::move(r)));
    }
    ++rank;
  }
  return rank;
}

std::optional<IntVector> solve_left(const IntMatrix& m, const IntVector& target) {
  if (target.size() != m.cols()) throw InputError("solve_left: dimension mismatch");
  return solve_left(hermite_normal_form(m), target);
}

std::optional<IntVector> solve_left(const HermiteResult& h, const IntVector& target) {
  if (target.size() != h.form.cols()) throw InputError("solve_left: dimension mismatch");
  const std::size_t rows = h.form.rows();
  auto t = echelon_solve(h.form, h.rank, target);
  if (!t) return std::nullopt;
  IntVector lambda(rows);
  for (std::size_t k = 0; k < h.rank; ++k)
    for (std::size_t j = 0; j < rows; ++j) lambda[j] += (*t)[k] * h.transform(k, j);
  return lambda;
}

IntMatrix left_kernel(const IntMatrix& m) {
  const HermiteResult h = hermite_normal_form(m);
  IntMatrix k(0, m.rows());
  for (std::size_t i = h.rank; i < m.rows(); ++i) k.append_row(h.transform.row(i));
  return k;
}

IntMatrix lattice_basis(const IntMatrix& m) {
  const HermiteResult h = hermite_normal_form(m);
  IntMatrix b(0, m.cols());
  for (std::size_t i = 0; i < h.rank; ++i) b.append_row(h.form.row(i));
  return b;
}

Lattice Lattice::generated_by(const IntMatrix& generators) {
  return Lattice(generators.cols(), lattice_basis(generators));
}

Lattice Lattice::saturated_span(const IntMatrix& generators) {
  const std::size_t n = generators.cols();
  // Orthogonal complement first, then its complement again.
  const IntMatrix perp = left_kernel(generators.transpose());
  if (perp.rows() == 0) return Lattice(n, IntMatrix::identity(n));
  return Lattice(n, lattice_basis(left_kernel(perp.transpose())));
}

std::optional<IntVector> Lattice::coordinates(const IntVector& x) const {
  if (x.size() != ambient_dim_)
    throw InputError("lattice membership: expected a vector of length " +
                     std::to_string(ambient_dim_) + ", got " + std::to_string(x.size()));
  return echelon_solve(basis_, basis_.rows(), x);
}

IntVector Lattice::point(const IntVector& coords) const {
  if (coords.size() != basis_.rows()) throw InputError("Lattice::point: wrong coordinate count");
  if (basis_.rows() == 0) return IntVector(ambient_dim_);
  return coords * basis_;
}

std::optional<IntVector> lattice_membership(const Lattice& lattice, const IntVector& x) {
  return lattice.coordinates(x);
}

}  // namespace sgcm

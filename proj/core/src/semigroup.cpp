#include "sgcm/semigroup.hpp"

#include "sgcm/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace sgcm {

// Reachable (level, residue) states of the facet quotient, grown on demand.
struct QuotientTable {
  std::mutex mutex;
  std::size_t levels = 0;
  std::vector<std::size_t> radix;
  std::vector<std::size_t> step;
  std::vector<std::vector<std::size_t>> digits;
  /// via[level * n + res] = 1 + generator used to reach the state; 0 = unreachable.
  std::vector<std::uint16_t> via;
  std::size_t n = 1;

  std::size_t encode(const IntVector& cls) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < radix.size(); ++j) idx = idx * radix[j] + static_cast<std::size_t>(cls[j]);
    return idx;
  }

  std::size_t add(std::size_t a, const std::vector<std::size_t>& b, bool subtract) const {
    std::size_t idx = 0, mul = 1;
    for (std::size_t j = radix.size(); j-- > 0;) {
      const std::size_t shift = subtract ? radix[j] - b[j] : b[j];
      const std::size_t digit = (a % radix[j] + shift) % radix[j];
      a /= radix[j];
      idx += digit * mul;
      mul *= radix[j];
    }
    return idx;
  }

  void grow(const FacetQuotient& q, std::size_t new_levels, std::size_t residues) {
    if (radix.empty() && !q.moduli.empty()) {
      for (const auto& d : q.moduli) radix.push_back(static_cast<std::size_t>(d));
    }
    if (step.empty()) {
      for (const IntVector& cls : q.off_classes) {
        step.push_back(cls.back() > Integer(kQuotientTableLimit) ? kQuotientTableLimit
                                                                   : static_cast<std::size_t>(cls.back()));
        std::vector<std::size_t> d;
        for (std::size_t j = 0; j + 1 < cls.size(); ++j) d.push_back(static_cast<std::size_t>(cls[j]));
        digits.push_back(std::move(d));
      }
    }
    n = residues;
    const std::size_t from = levels;
    levels = new_levels;
    via.resize(levels * n, 0);
    if (from == 0) via[0] = kStart;
    // States below `from` are final; pushing from them fills the new rows.
    for (std::size_t lvl = 0; lvl < levels; ++lvl)
      for (std::size_t res = 0; res < n; ++res) {
        if (via[lvl * n + res] == 0) continue;
        for (std::size_t k = 0; k < step.size(); ++k) {
          const std::size_t next = lvl + step[k];
          if (next < from || next >= levels) continue;
          std::uint16_t& slot = via[next * n + add(res, digits[k], false)];
          if (slot == 0) slot = static_cast<std::uint16_t>(k + 1);
        }
      }
  }

  std::optional<IntVector> coefficients(std::size_t lvl, std::size_t res) const {
    if (via[lvl * n + res] == 0) return std::nullopt;
    IntVector c(step.size());
    while (lvl != 0) {
      const std::size_t k = via[lvl * n + res] - 1u;
      ++c[k];
      lvl -= step[k];
      res = add(res, digits[k], true);
    }
    return c;
  }

  static constexpr std::uint16_t kStart = 0xffff;
  static constexpr std::size_t kQuotientTableLimit = std::size_t{1} << 24;
};

namespace {

// Nonnegative solutions c (over a subset of generators) of
// sum_k c_k * values.row(k) == target, where every generator has some positive
// entry in `values`. Solutions are visited in lexicographically decreasing
// order of c; the visitor returns true to stop. With `memoize`, dead
// (position, remainder) states are cached, which is only sound when the
// visitor accepts every solution it is shown.
class Decomposer {
 public:
  Decomposer(const IntMatrix& values, std::vector<std::size_t> gens, bool memoize)
      : values_(values), gens_(std::move(gens)), support_(gens_.size() + 1), memoize_(memoize) {
    const std::size_t m = values_.cols();
    support_[gens_.size()].assign(m, false);
    for (std::size_t p = gens_.size(); p-- > 0;) {
      support_[p] = support_[p + 1];
      for (std::size_t i = 0; i < m; ++i)
        if (values_(gens_[p], i) > 0) support_[p][i] = true;
    }
  }

  /// Visit solutions until `visit` returns true; returns whether it did.
  bool run(const IntVector& target, const std::function<bool(const IntVector&)>& visit) {
    for (const auto& t : target)
      if (t < 0) return false;
    IntVector coeffs(gens_.size());
    return search(0, target, coeffs, visit);
  }

 private:
  bool search(std::size_t pos, const IntVector& rem, IntVector& coeffs,
              const std::function<bool(const IntVector&)>& visit) {
    bool zero = true;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      if (rem[i] == 0) continue;
      zero = false;
      if (!support_[pos][i]) return false;  // nothing left can reach this coordinate
    }
    if (zero) {
      std::fill(coeffs.begin() + static_cast<std::ptrdiff_t>(pos), coeffs.end(), 0);
      return visit(coeffs);
    }
    if (pos == gens_.size()) return false;
    if (memoize_ && dead_.count({pos, rem})) return false;

    const std::size_t g = gens_[pos];
    std::optional<Integer> most;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      const Integer& a = values_(g, i);
      if (a <= 0) continue;
      Integer q = rem[i] / a;
      if (!most || q < *most) most = std::move(q);
    }
    IntVector next = rem;
    for (Integer c = most.value_or(0); c >= 0; --c) {
      for (std::size_t i = 0; i < rem.size(); ++i) next[i] = rem[i] - c * values_(g, i);
      coeffs[pos] = c;
      if (search(pos + 1, next, coeffs, visit)) return true;
    }
    if (memoize_) dead_.insert({pos, rem});
    return false;
  }

  const IntMatrix& values_;
  std::vector<std::size_t> gens_;
  std::vector<std::vector<bool>> support_;
  bool memoize_;
  std::set<std::pair<std::size_t, IntVector>> dead_;
};

IntVector combination(const AffineSemigroup& s, const IntVector& coefficients) {
  return coefficients * s.generators();
}

MembershipAnswer refuted(std::string reason) {
  MembershipAnswer a;
  a.status = Membership::NonMember;
  a.reason = std::move(reason);
  return a;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

void sort_canonically(const AffineSemigroup& s, std::vector<IntVector>& points) {
  std::vector<std::pair<Integer, IntVector>> keyed;
  keyed.reserve(points.size());
  for (auto& p : points) keyed.emplace_back(s.degree(p), std::move(p));
  std::sort(keyed.begin(), keyed.end());
  points.clear();
  for (auto& [deg, p] : keyed) points.push_back(std::move(p));
}


IntVector quotient_class(const AffineSemigroup& s, const FacetQuotient& q, const IntVector& x) {
  const std::size_t r = s.rank();
  const IntVector t = *s.lattice().coordinates(x) * q.transform;
  IntVector cls(r);
  for (std::size_t j = 0; j + 1 < r; ++j) cls[j] = floor_mod(t[j], q.moduli[j]);
  cls[r - 1] = t[r - 1];
  return cls;
}

constexpr std::size_t kQuotientTableLimit = std::size_t{1} << 24;

// Coefficients c >= 0 over the off-facet generators with x - sum c_k g_k in
// the group of the facet generators, or nullopt. x must lie in G_S.
std::optional<IntVector> off_facet_coefficients(const AffineSemigroup& s, std::size_t facet,
                                                const IntVector& x) {
  const FacetQuotient& q = s.facet_quotient(facet);
  const std::vector<std::size_t>& off = q.off;
  const std::size_t r = s.rank();
  const IntVector target = quotient_class(s, q, x);
  if (target[r - 1] < 0) return std::nullopt;

  Integer torsion = 1;
  for (const auto& d : q.moduli) torsion *= d;
  if (torsion * (target[r - 1] + 1) > Integer(kQuotientTableLimit)) {
    IntMatrix level_values(s.num_generators(), 1);
    for (std::size_t g : off) level_values(g, 0) = s.generator_facet_values()(g, facet);
    std::optional<IntVector> found;
    Decomposer search(level_values, off, false);
    search.run({dot(s.cone().facet_normals.row(facet), x)}, [&](const IntVector& c) {
      IntVector rest = x;
      for (std::size_t k = 0; k < off.size(); ++k)
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c[k] * s.generators()(off[k], j);
      if (!solve_left(s.facet_group(facet), rest)) return false;
      found = c;
      return true;
    });
    return found;
  }

  QuotientTable& table = s.quotient_table(facet);
  const std::size_t n = static_cast<std::size_t>(torsion);
  const std::size_t wanted = static_cast<std::size_t>(target[r - 1]) + 1;
  std::lock_guard lock(table.mutex);
  if (table.levels < wanted) table.grow(q, std::max(wanted, 2 * table.levels), n);
  return table.coefficients(static_cast<std::size_t>(target[r - 1]), table.encode(target));
}

}  // namespace

AffineSemigroup AffineSemigroup::build(const IntMatrix& generators) {
  if (generators.rows() == 0) throw InputError("no generators");
  for (std::size_t r = 0; r < generators.rows(); ++r) {
    for (std::size_t c = 0; c < generators.cols(); ++c)
      if (generators(r, c) < 0)
        throw InputError("negative entry in generator " + std::to_string(r + 1));
    if (generators.is_zero_row(r))
      throw InputError("zero generator (row " + std::to_string(r + 1) + ")");
  }

  AffineSemigroup s;
  s.cone_ = cone_from_generators(generators);
  if (!is_pointed(s.cone_)) throw UnsupportedError("not pointed: the cone contains a line");
  s.lattice_ = Lattice::generated_by(generators);
  if (s.lattice_.rank() != s.cone_.dimension())
    throw InvariantError("lattice rank differs from cone dimension");
  s.degree_ = strictly_positive_functional(s.cone_);
  s.generator_values_ = generators * s.cone_.facet_normals.transpose();
  const std::size_t r = s.lattice_.rank();
  for (std::size_t f = 0; f < s.cone_.num_facets(); ++f) {
    const IntMatrix on = generators.select_rows(s.cone_.incidence[f]);
    s.facet_groups_.push_back(hermite_normal_form(on));
    IntMatrix coords(0, r);
    for (std::size_t k = 0; k < on.rows(); ++k) coords.append_row(*s.lattice_.coordinates(on.row(k)));
    const SmithResult snf = smith_normal_form(coords);
    FacetQuotient q{snf.right, {}, {}, {}};
    for (std::size_t j = 0; j + 1 < r; ++j) {
      if (j >= coords.rows() || snf.diagonal(j, j) == 0)
        throw InvariantError("facet " + std::to_string(f + 1) + " does not have rank r - 1");
      q.moduli.push_back(snf.diagonal(j, j));
    }
    // Orient the free coordinate like the facet functional.
    for (std::size_t g = 0; g < generators.rows(); ++g) {
      const Integer level = s.generator_values_(g, f);
      if (level == 0) continue;
      const Integer free = dot(*s.lattice_.coordinates(generators.row(g)), q.transform.column(r - 1));
      if ((free > 0) != (level > 0))
        for (std::size_t i = 0; i < r; ++i) q.transform(i, r - 1) = -q.transform(i, r - 1);
      break;
    }
    for (std::size_t g = 0; g < generators.rows(); ++g) {
      if (s.generator_values_(g, f) == 0) continue;
      q.off.push_back(g);
      q.off_classes.push_back(quotient_class(s, q, generators.row(g)));
      if (q.off_classes.back()[r - 1] <= 0)
        throw InvariantError("facet quotient: generator off the facet has level <= 0");
    }
    s.facet_quotients_.push_back(std::move(q));
    s.tables_.push_back(std::make_shared<QuotientTable>());
  }
  return s;
}

void AffineSemigroup::check_dimension(const IntVector& x) const {
  if (x.size() != ambient_dim())
    throw InputError("dimension mismatch: expected a vector of length " +
                     std::to_string(ambient_dim()) + ", got " + std::to_string(x.size()));
}

MembershipAnswer member_of_S(const AffineSemigroup& s, const IntVector& x) {
  s.check_dimension(x);
  if (!s.lattice().contains(x)) return refuted("not in G_S");
  const IntVector values = s.facet_values(x);
  for (const auto& v : values)
    if (v < 0) return refuted("outside C(S)");

  // L is injective on G_S, so matching facet values is matching x itself.
  MembershipAnswer answer = refuted("no nonnegative decomposition");
  Decomposer search(s.generator_facet_values(), all_indices(s.num_generators()), true);
  search.run(values, [&](const IntVector& c) {
    answer.status = Membership::Member;
    answer.reason.clear();
    answer.coefficients = c;
    answer.offset = IntVector(s.ambient_dim());
    return true;
  });
  if (answer.is_member() && combination(s, answer.coefficients) != x)
    throw InvariantError("member_of_S: certificate does not reproduce the query");
  return answer;
}

MembershipAnswer member_of_Si(const AffineSemigroup& s, std::size_t facet, const IntVector& x) {
  s.check_dimension(x);
  if (facet >= s.num_facets())
    throw InputError("invalid facet index " + std::to_string(facet + 1) + " (semigroup has " +
                     std::to_string(s.num_facets()) + " facets)");
  if (!s.lattice().contains(x)) return refuted("not in G_S");
  const Integer level = dot(s.cone().facet_normals.row(facet), x);
  if (level < 0) return refuted("negative value on facet " + std::to_string(facet + 1));

  MembershipAnswer direct = member_of_S(s, x);
  if (direct.is_member()) {
    direct.offset.assign(s.ambient_dim(), 0);
    return direct;
  }

  const std::vector<std::size_t>& on = s.facet_generators(facet);
  const std::vector<std::size_t>& off = s.facet_quotient(facet).off;
  const auto c = off_facet_coefficients(s, facet, x);
  if (!c) return refuted("no decomposition modulo the facet group");

  IntVector rest = x;
  for (std::size_t k = 0; k < off.size(); ++k)
    if ((*c)[k] != 0)
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= (*c)[k] * s.generators()(off[k], j);
  const auto lambda = solve_left(s.facet_group(facet), rest);
  if (!lambda) throw InvariantError("member_of_Si: residual is not in the facet group");
  MembershipAnswer answer;
  answer.status = Membership::Member;
  answer.coefficients.assign(s.num_generators(), 0);
  answer.offset.assign(s.ambient_dim(), 0);
  for (std::size_t k = 0; k < off.size(); ++k) answer.coefficients[off[k]] = (*c)[k];
  for (std::size_t k = 0; k < on.size(); ++k) {
    const Integer& l = (*lambda)[k];
    if (l > 0) {
      answer.coefficients[on[k]] = l;
    } else if (l < 0) {
      for (std::size_t j = 0; j < s.ambient_dim(); ++j)
        answer.offset[j] -= l * s.generators()(on[k], j);
    }
  }
  if (answer.is_member()) {
    IntVector shifted = x;
    for (std::size_t j = 0; j < x.size(); ++j) shifted[j] += answer.offset[j];
    if (combination(s, answer.coefficients) != shifted ||
        dot(s.cone().facet_normals.row(facet), answer.offset) != 0)
      throw InvariantError("member_of_Si: certificate does not reproduce the query");
  }
  return answer;
}

bool in_localization(const AffineSemigroup& s, std::size_t facet, const IntVector& x) {
  s.check_dimension(x);
  if (facet >= s.num_facets()) throw InputError("invalid facet index " + std::to_string(facet + 1));
  if (!s.lattice().contains(x) || dot(s.cone().facet_normals.row(facet), x) < 0) return false;
  return off_facet_coefficients(s, facet, x).has_value();
}

MembershipAnswer member_of_Sprime(const AffineSemigroup& s, const IntVector& x) {
  s.check_dimension(x);
  MembershipAnswer answer;
  answer.status = Membership::Member;
  for (std::size_t f = 0; f < s.num_facets(); ++f) {
    MembershipAnswer part = member_of_Si(s, f, x);
    if (!part.is_member()) {
      answer.status = Membership::NonMember;
      answer.reason = "not in S_" + std::to_string(f + 1) + ": " + part.reason;
      answer.facet = f;
      answer.parts.clear();
      answer.parts.push_back(std::move(part));
      return answer;
    }
    answer.parts.push_back(std::move(part));
  }
  return answer;
}

std::vector<IntVector> lattice_points_in_box(const AffineSemigroup& s,
                                             const std::vector<Integer>& lower,
                                             const std::vector<Integer>& upper) {
  const std::size_t m = s.num_facets();
  const std::size_t r = s.rank();
  if (lower.size() != m || upper.size() != m)
    throw InputError("lattice_points_in_box: one bound per facet required");
  for (std::size_t i = 0; i < m; ++i)
    if (lower[i] > upper[i]) return {};

  // Facet values of the lattice basis: L(t * B) = t * M.
  const IntMatrix& basis = s.lattice().basis();
  const IntMatrix values = basis * s.cone().facet_normals.transpose();

  // r independent facet columns, narrowest ranges first.
  std::vector<std::size_t> order = all_indices(m);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return upper[a] - lower[a] < upper[b] - lower[b];
  });
  std::vector<std::size_t> chosen;
  for (std::size_t f : order) {
    if (chosen.size() == r) break;
    chosen.push_back(f);
    if (rational_rank(values.select_cols(chosen)) < chosen.size()) chosen.pop_back();
  }
  if (chosen.size() != r) throw InvariantError("facet functionals not injective on G_S");

  // v = s_coeffs * H enumerates the image lattice exactly; t = s_coeffs * U.
  const HermiteResult h = hermite_normal_form(values.select_cols(chosen));
  Integer nodes = 1;
  for (std::size_t j = 0; j + 1 < r; ++j)
    nodes *= (upper[chosen[j]] - lower[chosen[j]]) / h.form(j, j) + 1;
  if (nodes > Integer(kMaxBoxNodes))
    throw UnsupportedError("box enumeration: " + nodes.str() + " partial states exceed the supported " +
                           std::to_string(kMaxBoxNodes) + "; use a smaller bound");
  const IntMatrix step_values = h.transform * values;
  const IntMatrix step_points = h.transform * basis;
  std::vector<IntVector> points;
  std::vector<Integer> coeffs(r);
  std::vector<IntVector> acc(r + 1, IntVector(m));
  auto point_of = [&] {
    IntVector x(s.ambient_dim());
    for (std::size_t k = 0; k < r; ++k)
      if (coeffs[k] != 0)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += coeffs[k] * step_points(k, j);
    return x;
  };
  std::function<void(std::size_t)> descend = [&](std::size_t j) {
    Integer partial = 0;
    for (std::size_t k = 0; k < j; ++k) partial += coeffs[k] * h.form(k, j);
    const Integer& pivot = h.form(j, j);
    const std::size_t f = chosen[j];
    Integer lo = -floor_div(-(lower[f] - partial), pivot);
    Integer hi = floor_div(upper[f] - partial, pivot);
    const IntVector& base = acc[j];
    if (j + 1 == r) {
      // Every facet value is now affine in the last coefficient.
      for (std::size_t i = 0; i < m && lo <= hi; ++i) {
        const Integer& a = step_values(j, i);
        if (a == 0) {
          if (base[i] < lower[i] || base[i] > upper[i]) return;
        } else if (a > 0) {
          lo = std::max(lo, -floor_div(-(lower[i] - base[i]), a));
          hi = std::min(hi, floor_div(upper[i] - base[i], a));
        } else {
          lo = std::max(lo, -floor_div(upper[i] - base[i], -a));
          hi = std::min(hi, floor_div(base[i] - lower[i], -a));
        }
      }
      if (lo <= hi && Integer(points.size()) + (hi - lo) >= Integer(kMaxBoxPoints))
        throw UnsupportedError("box enumeration: more than " + std::to_string(kMaxBoxPoints) +
                               " points; use a smaller bound");
      for (Integer c = lo; c <= hi; ++c) {
        coeffs[j] = c;
        points.push_back(point_of());
      }
      return;
    }
    for (Integer c = lo; c <= hi; ++c) {
      coeffs[j] = c;
      for (std::size_t i = 0; i < m; ++i) acc[j + 1][i] = base[i] + c * step_values(j, i);
      descend(j + 1);
    }
  };
  descend(0);
  sort_canonically(s, points);
  return points;
}

std::vector<IntVector> saturation_elements_up_to(const AffineSemigroup& s, const Integer& d) {
  if (d < 0) return {};
  std::vector<IntVector> points = lattice_points_in_box(
      s, std::vector<Integer>(s.num_facets(), 0), std::vector<Integer>(s.num_facets(), d));
  std::erase_if(points, [&](const IntVector& x) { return s.degree(x) > d; });
  return points;
}

std::vector<IntVector> sprime_minus_S_up_to(const AffineSemigroup& s, const Integer& d) {
  std::vector<IntVector> out;
  for (IntVector& x : saturation_elements_up_to(s, d))
    if (!member_of_S(s, x).is_member() && member_of_Sprime(s, x).is_member())
      out.push_back(std::move(x));
  return out;
}

HochsterTransform hochster_transform(const AffineSemigroup& s) {
  const IntMatrix& map = s.cone().facet_normals;
  if (rational_rank(s.lattice().basis() * map.transpose()) != s.rank())
    throw InvariantError("Hochster transform is not injective on G_S");
  IntMatrix image = s.generators() * map.transpose();
  return {map, AffineSemigroup::build(image)};
}

StandardReport is_standard(const AffineSemigroup& s) {
  StandardReport report;
  const PolyCone& cone = s.cone();

  // Orthant section of the span: {t : (t * P)_k >= 0 for all k}.
  const IntMatrix& span = cone.span_basis;
  const DualDescription section = extreme_rays(span.transpose());
  if (section.lineality.empty() && !section.rays.empty()) {
    IntMatrix rays(0, s.ambient_dim());
    for (const IntVector& t : section.rays) rays.append_row(t * span);
    report.saturation_in_orthant = cone_from_generators(rays).facet_normals == cone.facet_normals;
  }

  report.facets_distinct = true;
  for (std::size_t i = 0; i < cone.num_facets(); ++i)
    for (std::size_t j = i + 1; j < cone.num_facets(); ++j)
      if (cone.facet_normals.row(i) == cone.facet_normals.row(j)) report.facets_distinct = false;

  report.facet_ranks = true;
  for (std::size_t i = 0; i < cone.num_facets(); ++i)
    if (rational_rank(s.generators().select_rows(cone.incidence[i])) + 1 != s.rank())
      report.facet_ranks = false;
  return report;
}

SemigroupProfile classify(const AffineSemigroup& s) {
  SemigroupProfile p;
  p.ambient_dim = s.ambient_dim();
  p.rank = s.rank();
  p.num_facets = s.num_facets();
  p.num_generators = s.num_generators();
  // Homogeneous iff phi(g) = 1 is solvable for all generators g.
  IntMatrix augmented(s.num_generators(), s.ambient_dim() + 1);
  for (std::size_t g = 0; g < s.num_generators(); ++g) {
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) augmented(g, j) = s.generators()(g, j);
    augmented(g, s.ambient_dim()) = 1;
  }
  p.homogeneous = rational_rank(augmented) == s.rank();
  p.is_toric_surface_in_P4 = p.num_generators == 5 && p.rank == 3 && p.homogeneous;
  return p;
}

}  // namespace sgcm

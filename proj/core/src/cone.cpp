#include "sgcm/cone.hpp"

#include "sgcm/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace sgcm {
namespace {

struct TrackedRay {
  IntVector ray;
  boost::dynamic_bitset<> tight;  // processed constraints vanishing on the ray
};

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return make_primitive(std::move(out));
}

}  // namespace

DualDescription extreme_rays(const IntMatrix& constraints) {
  const std::size_t d = constraints.cols();
  const std::size_t k = constraints.rows();
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<TrackedRay> rays;

  for (std::size_t c = 0; c < k; ++c) {
    const IntVector g = constraints.row(c);

    // The new hyperplane may cut the lineality space.
    std::size_t cut = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (dot(g, lineality[i]) != 0) {
        cut = i;
        break;
      }
    if (cut < lineality.size()) {
      IntVector v = std::move(lineality[cut]);
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(cut));
      Integer gv = dot(g, v);
      if (gv < 0) {
        for (auto& x : v) x = -x;
        gv = -gv;
      }
      for (auto& u : lineality) {
        const Integer gu = dot(g, u);
        if (gu != 0) u = combine(gv, u, -gu, v);
      }
      for (auto& r : rays) {
        const Integer gr = dot(g, r.ray);
        if (gr != 0) r.ray = combine(gv, r.ray, -gr, v);
        r.tight.resize(k);
        r.tight.set(c);
      }
      boost::dynamic_bitset<> tight(k);
      for (std::size_t j = 0; j < c; ++j) tight.set(j);
      rays.push_back({std::move(v), std::move(tight)});
      continue;
    }

    std::vector<Integer> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) value[i] = dot(g, rays[i].ray);

    std::vector<TrackedRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] < 0) continue;
      TrackedRay r = rays[i];
      if (value[i] == 0) r.tight.set(c);
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (value[n] >= 0) continue;
        const boost::dynamic_bitset<> common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (common.is_subset_of(rays[o].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        TrackedRay r{combine(value[p], rays[n].ray, -value[n], rays[p].ray), common};
        r.tight.set(c);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  DualDescription out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.ray));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

bool PolyCone::contains(const IntVector& x) const {
  if (x.size() != ambient_dim) throw InputError("PolyCone::contains: dimension mismatch");
  if (!Lattice::saturated_span(span_basis).contains(x)) return false;
  for (std::size_t i = 0; i < num_facets(); ++i)
    if (dot(facet_normals.row(i), x) < 0) return false;
  return true;
}

PolyCone cone_from_generators(const IntMatrix& gens) {
  if (gens.rows() == 0) throw InputError("cone: no generators");
  if (gens.cols() > kMaxAmbientDim)
    throw InputError("cone: ambient dimension " + std::to_string(gens.cols()) +
                     " exceeds the supported maximum of " + std::to_string(kMaxAmbientDim));
  for (std::size_t i = 0; i < gens.rows(); ++i)
    if (gens.is_zero_row(i)) throw InputError("zero generator (row " + std::to_string(i + 1) + ")");

  const std::size_t n = gens.cols();
  const Lattice span = Lattice::saturated_span(gens);
  const std::size_t r = span.rank();

  // Generator coordinates in the saturated span lattice; the dual cone of the
  // resulting full-dimensional cone has the facet functionals as rays.
  IntMatrix coords(0, r);
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    auto c = span.coordinates(gens.row(i));
    if (!c) throw InvariantError("cone: generator outside its own span lattice");
    coords.append_row(*c);
  }
  const DualDescription dual = extreme_rays(coords);
  if (!dual.lineality.empty()) throw InvariantError("cone: dual cone has lineality");

  // Lift each functional to Z^n and reduce modulo the orthogonal lattice.
  const IntMatrix perp = lattice_basis(left_kernel(gens.transpose()));
  const IntMatrix span_t = span.basis().transpose();
  std::vector<IntVector> normals;
  for (const IntVector& a : dual.rays) {
    auto lifted = solve_left(span_t, a);
    if (!lifted) throw InvariantError("cone: facet functional does not lift to Z^n");
    IntVector ell = std::move(*lifted);
    for (std::size_t k = 0; k < perp.rows(); ++k) {
      std::size_t p = 0;
      while (perp(k, p) == 0) ++p;
      const Integer q = floor_div(ell[p], perp(k, p));
      if (q != 0)
        for (std::size_t j = p; j < n; ++j) ell[j] -= q * perp(k, j);
    }
    if (content(ell) != 1) throw InvariantError("cone: lifted facet normal not primitive");
    normals.push_back(std::move(ell));
  }
  std::sort(normals.begin(), normals.end());

  PolyCone cone;
  cone.ambient_dim = n;
  cone.generators = gens;
  cone.facet_normals = IntMatrix::from_rows(normals, n);
  cone.span_basis = span.basis();
  cone.incidence.resize(normals.size());
  for (std::size_t f = 0; f < normals.size(); ++f)
    for (std::size_t g = 0; g < gens.rows(); ++g) {
      const Integer v = dot(normals[f], gens.row(g));
      if (v < 0) throw InvariantError("cone: generator violates a facet inequality");
      if (v == 0) cone.incidence[f].push_back(g);
    }
  return cone;
}

bool is_pointed(const PolyCone& cone) {
  if (cone.num_facets() == 0) return false;
  // Rank of the facet functionals restricted to the span.
  return rational_rank(cone.facet_normals * cone.span_basis.transpose()) == cone.dimension();
}

IntVector strictly_positive_functional(const PolyCone& cone) {
  if (!is_pointed(cone)) throw UnsupportedError("not pointed: the cone contains a line");
  IntVector w(cone.ambient_dim);
  for (std::size_t i = 0; i < cone.num_facets(); ++i)
    for (std::size_t j = 0; j < cone.ambient_dim; ++j) w[j] += cone.facet_normals(i, j);
  for (std::size_t g = 0; g < cone.generators.rows(); ++g)
    if (dot(w, cone.generators.row(g)) <= 0)
      throw InvariantError("positive functional vanishes on generator " + std::to_string(g + 1));
  return w;
}

}  // namespace sgcm

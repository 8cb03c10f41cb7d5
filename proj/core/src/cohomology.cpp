#include "sgcm/cohomology.hpp"

#include "sgcm/error.hpp"

#include <algorithm>

namespace sgcm {
namespace {

Integer max_generator_degree(const AffineSemigroup& s) {
  Integer d = 0;
  for (std::size_t g = 0; g < s.num_generators(); ++g)
    d = std::max(d, s.degree(s.generators().row(g)));
  return d;
}

// The transformed semigroup together with the facet relabelling back to S.
struct Analyzed {
  HochsterTransform transform;
  std::vector<std::size_t> origin;  ///< facet of the image -> facet of S
  HermiteResult inverse;            ///< Hermite form of basis(G_S) * L^T

  IntVector to_original(const AffineSemigroup& s, const IntVector& y) const {
    const auto coords = solve_left(inverse, y);
    if (!coords) throw InvariantError("Hochster transform: image point has no preimage in G_S");
    return s.lattice().point(*coords);
  }
};

Analyzed analyze(const AffineSemigroup& s) {
  Analyzed a{hochster_transform(s), {}, {}};
  const AffineSemigroup& t = a.transform.image;
  if (t.num_facets() != s.num_facets())
    throw InvariantError("Hochster transform changed the number of facets");
  for (std::size_t f = 0; f < t.num_facets(); ++f) {
    std::size_t match = s.num_facets();
    for (std::size_t g = 0; g < s.num_facets(); ++g)
      if (s.facet_generators(g) == t.facet_generators(f)) match = g;
    if (match == s.num_facets())
      throw InvariantError("Hochster transform: facet " + std::to_string(f + 1) + " has no preimage");
    a.origin.push_back(match);
  }
  a.inverse = hermite_normal_form(s.lattice().basis() * a.transform.map.transpose());
  return a;
}

bool inside_some(VertexSet j, const std::vector<VertexSet>& targets) {
  return std::any_of(targets.begin(), targets.end(), [j](VertexSet t) { return (j & ~t) == 0; });
}

// Facets of S (in S labels) whose localization misses y, or 0 once that set
// can no longer equal one of the targets.
VertexSet missing_localizations(const Analyzed& a, const IntVector& y,
                                const std::vector<VertexSet>& targets) {
  const AffineSemigroup& t = a.transform.image;
  const IntVector values = t.facet_values(y);
  VertexSet j = 0;
  for (std::size_t f = 0; f < t.num_facets(); ++f)
    if (values[f] < 0) j |= VertexSet{1} << a.origin[f];
  if (!inside_some(j, targets)) return 0;
  for (std::size_t f = 0; f < t.num_facets(); ++f) {
    const VertexSet bit = VertexSet{1} << a.origin[f];
    if ((j & bit) != 0 || in_localization(t, f, y)) continue;
    j |= bit;
    if (!inside_some(j, targets)) return 0;
  }
  return j;
}

void check_pi_size(const AffineSemigroup& s) {
  if (s.num_facets() > kMaxComplexVertices)
    throw UnsupportedError("cohomology: " + std::to_string(s.num_facets()) +
                           " facets exceed the supported " + std::to_string(kMaxComplexVertices));
}

}  // namespace

Integer default_bound(const AffineSemigroup& s) { return 4 * max_generator_degree(s); }
Integer default_degree(const AffineSemigroup& s) { return 3 * max_generator_degree(s); }

std::size_t ContributionRecord::betti_at(int q) const {
  if (q < -1 || static_cast<std::size_t>(q + 1) >= betti.size()) return 0;
  return betti[static_cast<std::size_t>(q + 1)];
}

std::string to_string(LevelVerdict v) {
  switch (v) {
    case LevelVerdict::ZeroExact: return "ZeroExact";
    case LevelVerdict::ZeroUpToBound: return "ZeroUpToBound";
    case LevelVerdict::NonzeroUpToBound: return "NonzeroUpToBound";
  }
  return "?";
}

std::string to_string(CmKind k) {
  switch (k) {
    case CmKind::CohenMacaulayExact: return "CohenMacaulayExact";
    case CmKind::CohenMacaulayUpToBound: return "CohenMacaulayUpToBound";
    case CmKind::NotCohenMacaulayUpToBound: return "NotCohenMacaulayUpToBound";
  }
  return "?";
}

CohomologyReport analyze_cohomology(const AffineSemigroup& s, const CohomologyOptions& options) {
  check_pi_size(s);
  CohomologyReport report;
  report.rank = s.rank();
  report.num_facets = s.num_facets();
  report.bound = options.bound.value_or(default_bound(s));
  if (report.bound < 0) throw InputError("bound must be nonnegative");
  report.field = options.field;
  report.pi = build_pi_S(s);

  const std::size_t m = s.num_facets();
  const std::size_t max_size = m >= 2 ? m - 2 : 0;
  for (VertexSet j : non_faces(report.pi, max_size)) {
    ContributionRecord rec;
    rec.j = j;
    rec.betti = reduced_betti_numbers(restrict(report.pi, j), options.field);
    report.contributions.push_back(std::move(rec));
  }

  // Levels whose candidates all have zero Betti number need no enumeration.
  std::vector<bool> needs_box(report.contributions.size(), false);
  bool any = false;
  for (int i = 2; i < static_cast<int>(report.rank); ++i)
    for (std::size_t c = 0; c < report.contributions.size(); ++c)
      if (report.contributions[c].betti_at(i - 2) != 0) any = needs_box[c] = true;

  if (any) {
    const Analyzed a = analyze(s);
    const AffineSemigroup& t = a.transform.image;
    const std::vector<Integer> lo(m, -report.bound), hi(m, report.bound);
    std::vector<VertexSet> targets;
    for (std::size_t c = 0; c < report.contributions.size(); ++c)
      if (needs_box[c]) targets.push_back(report.contributions[c].j);
    for (const IntVector& y : lattice_points_in_box(t, lo, hi)) {
      ++report.box_points;
      const VertexSet j = missing_localizations(a, y, targets);
      if (j == 0) continue;
      for (std::size_t c = 0; c < report.contributions.size(); ++c) {
        ContributionRecord& rec = report.contributions[c];
        if (rec.j != j || !needs_box[c]) continue;
        if (rec.witness_count++ == 0) rec.witness = a.to_original(s, y);
      }
    }
  }

  for (int i = 0; i < static_cast<int>(report.rank); ++i) {
    LevelReport level;
    level.level = i;
    for (std::size_t c = 0; c < report.contributions.size(); ++c) {
      const ContributionRecord& rec = report.contributions[c];
      const std::size_t b = rec.betti_at(i - 2);
      if (b == 0) continue;
      level.contributing.push_back(c);
      level.dimension_in_box += rec.witness_count * b;
      if (rec.witness && !level.witness) {
        level.witness = rec.witness;
        level.witness_set = rec.j;
      }
    }
    if (level.contributing.empty())
      level.verdict = LevelVerdict::ZeroExact;
    else if (level.dimension_in_box == 0)
      level.verdict = LevelVerdict::ZeroUpToBound;
    else
      level.verdict = LevelVerdict::NonzeroUpToBound;
    report.levels.push_back(std::move(level));
  }
  if (report.rank >= 2 && report.levels[1].verdict != LevelVerdict::ZeroExact)
    throw InvariantError("H^1 of k[S'] must vanish");
  return report;
}

GradedPiece graded_piece_dimension(const AffineSemigroup& s, int level, const IntVector& x,
                                   const FieldSpec& field) {
  s.check_dimension(x);
  if (!s.lattice().contains(x)) throw InputError("graded piece: " + to_string(x) + " is not in G_S");
  check_pi_size(s);
  const std::size_t m = s.num_facets();
  if (m < 3) return {};
  const Analyzed a = analyze(s);
  const VertexSet all = static_cast<VertexSet>((std::uint64_t{1} << m) - 1);
  const VertexSet j = missing_localizations(a, a.transform.map * x, {all});
  if (j == 0 || vertex_count(j) > m - 2) return {};
  const SimplicialComplex pi = build_pi_S(s);
  if (pi.contains(j)) return {};
  return {reduced_betti(restrict(pi, j), level - 2, field), j};
}

CmVerdict cm_verdict(const CohomologyReport& report) {
  CmVerdict v;
  v.bound = report.bound;
  for (const LevelReport& level : report.levels) {
    if (level.level < 2) continue;
    if (level.verdict == LevelVerdict::NonzeroUpToBound) {
      v.kind = CmKind::NotCohenMacaulayUpToBound;
      v.level = level.level;
      v.j = level.witness_set;
      v.witness = level.witness;
      return v;
    }
    if (level.verdict == LevelVerdict::ZeroUpToBound) v.kind = CmKind::CohenMacaulayUpToBound;
  }
  return v;
}

CmVerdict cm_verdict(const AffineSemigroup& s, const CohomologyOptions& options) {
  return cm_verdict(analyze_cohomology(s, options));
}

GotoWatanabeReport goto_watanabe_check(const AffineSemigroup& s, std::optional<Integer> degree,
                                       const CohomologyOptions& options) {
  if (!classify(s).is_toric_surface_in_P4) throw InputError("not a toric surface in P4");
  GotoWatanabeReport r;
  r.degree = degree.value_or(default_degree(s));
  if (r.degree < 0) throw InputError("degree must be nonnegative");
  r.sprime_minus_s = sprime_minus_S_up_to(s, r.degree);
  r.cm = cm_verdict(s, options);
  const bool equal = r.sprime_minus_s.empty();
  const bool cm = r.cm.kind != CmKind::NotCohenMacaulayUpToBound;
  r.consistent = equal == cm;
  r.conclusion = r.consistent ? "consistent" : "inconclusive at bound";
  return r;
}

}  // namespace sgcm

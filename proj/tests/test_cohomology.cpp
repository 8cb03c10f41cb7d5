#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include "sgcm/cohomology.hpp"
#include "sgcm/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace sgcm;
using namespace sgcm::test;

namespace {

CohomologyOptions with_bound(long long b) { return {FieldSpec::rationals(), Integer(b)}; }

// Points of G_S whose image under the Hochster map lies in [-b, b]^m, in original coordinates.
std::vector<IntVector> analysis_box(const AffineSemigroup& s, long long b) {
  const auto t = hochster_transform(s);
  const std::size_t m = t.image.num_facets();
  const HermiteResult back = hermite_normal_form(s.lattice().basis() * t.map.transpose());
  std::vector<IntVector> out;
  for (const IntVector& y : lattice_points_in_box(t.image, std::vector<Integer>(m, -b),
                                                  std::vector<Integer>(m, b))) {
    const auto coords = solve_left(back, y);
    REQUIRE(coords);
    out.push_back(s.lattice().point(*coords));
  }
  return out;
}

IntMatrix permute_columns(const IntMatrix& g, const std::vector<std::size_t>& perm) {
  return g.select_cols(perm);
}

IntMatrix permute_rows(const IntMatrix& g, const std::vector<std::size_t>& perm) {
  return g.select_rows(perm);
}

// Betti data and witness counts as a label-free multiset.
std::vector<std::pair<std::vector<std::size_t>, std::size_t>> shape(const CohomologyReport& r) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> out;
  for (const auto& c : r.contributions) out.emplace_back(c.betti, c.witness_count);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("polynomial ring: every level vanishes exactly") {
  const auto s = build_semigroup(kPolynomialRing3);
  const auto r = analyze_cohomology(s);
  CHECK(r.contributions.empty());
  REQUIRE(r.levels.size() == 3);
  for (const auto& l : r.levels) CHECK(l.verdict == LevelVerdict::ZeroExact);
  CHECK(cm_verdict(r).kind == CmKind::CohenMacaulayExact);
  for (const IntVector& x : {IntVector{0, 0, 0}, IntVector{1, 2, 3}, IntVector{5, 0, 1}})
    for (int i = 0; i < 3; ++i) CHECK(graded_piece_dimension(s, i, x).dimension == 0);
}

TEST_CASE("three facets and rank two are Cohen-Macaulay exactly") {
  CHECK(cm_verdict(build_semigroup(kTriangleSurface)).kind == CmKind::CohenMacaulayExact);
  CHECK(cm_verdict(build_semigroup(kQuarticCurve)).kind == CmKind::CohenMacaulayExact);
}

TEST_CASE("four-facet surfaces: two candidates, no witness") {
  for (const auto& fx : quadrilateral_surfaces()) {
    CAPTURE(fx.name);
    const auto s = build_semigroup(fx.generators);
    const auto r = analyze_cohomology(s, with_bound(12));
    REQUIRE(r.contributions.size() == 2);
    for (const auto& c : r.contributions) {
      CHECK(vertex_count(c.j) == 2);
      CHECK(c.betti_at(0) == 1);
      CHECK(c.witness_count == 0);
    }
    CHECK(r.levels[1].verdict == LevelVerdict::ZeroExact);
    CHECK(r.levels[2].verdict == LevelVerdict::ZeroUpToBound);
    CHECK(r.levels[2].contributing.size() == 2);
    const auto v = cm_verdict(r);
    CHECK(v.kind == CmKind::CohenMacaulayUpToBound);
    CHECK(v.bound == 12);
  }
}

TEST_CASE("rectangle surface: every graded piece in the box is zero") {
  const auto s = build_semigroup(kRectangleSurface);
  const auto box = analysis_box(s, 6);
  CHECK(box.size() > 50);
  for (const IntVector& x : box) CHECK(graded_piece_dimension(s, 2, x).dimension == 0);
}

TEST_CASE("generators never carry cohomology") {
  for (const IntMatrix& g : {kRectangleSurface, kNonCmSample, kTriangleSurface}) {
    const auto s = build_semigroup(g);
    for (std::size_t k = 0; k < s.num_generators(); ++k)
      for (int i = 2; i < static_cast<int>(s.rank()); ++i)
        CHECK(graded_piece_dimension(s, i, g.row(k)).dimension == 0);
  }
}

TEST_CASE("graded_piece_dimension rejects points outside G_S") {
  const auto curve = build_semigroup(kQuarticCurve);
  CHECK_THROWS_AS(graded_piece_dimension(curve, 2, {1, 0}), InputError);
  CHECK_THROWS_AS(graded_piece_dimension(curve, 2, {1, 0, 0}), InputError);
}

TEST_CASE("non Cohen-Macaulay sample") {
  const auto s = build_semigroup(kNonCmSample);
  const auto r = analyze_cohomology(s, with_bound(12));
  const auto v = cm_verdict(r);
  REQUIRE(v.kind == CmKind::NotCohenMacaulayUpToBound);
  CHECK(v.level == 2);
  REQUIRE(v.witness);
  REQUIRE(v.j);
  CHECK(*v.witness == IntVector{1, 1, 1});
  CHECK(*v.j == vertex_set({3, 4}));
  CHECK(graded_piece_dimension(s, 2, *v.witness).dimension == 1);
  CHECK(graded_piece_dimension(s, 3, *v.witness).dimension == 0);

  // Oracle: x ∉ S, x ∈ S_i for i ∉ J by explicit bounded certificates, and no
  // certificate of size <= 40 for j ∈ J.
  const IntVector& x = *v.witness;
  const IntVector& w = s.degree_functional();
  const Integer bound = 40;
  const auto elements = bfs_semigroup_elements(kNonCmSample, w, s.degree(x) + bound);
  CHECK(elements.count(x) == 0);
  CHECK(s.lattice().contains(x));
  for (std::size_t f = 0; f < s.num_facets(); ++f) {
    CAPTURE(f);
    const bool found = bounded_localization_oracle(
        elements, kNonCmSample.select_rows(s.facet_generators(f)), w, x, bound);
    CHECK(found == ((*v.j >> f & 1) == 0));
  }
}

TEST_CASE("property: monotone in the bound") {
  const auto s = build_semigroup(kNonCmSample);
  std::size_t previous = 0;
  bool nonzero = false;
  for (long long b = 0; b <= 10; ++b) {
    const auto r = analyze_cohomology(s, with_bound(b));
    const std::size_t dim = r.levels[2].dimension_in_box;
    CHECK(dim >= previous);
    if (nonzero) CHECK(r.levels[2].verdict == LevelVerdict::NonzeroUpToBound);
    nonzero = nonzero || r.levels[2].verdict == LevelVerdict::NonzeroUpToBound;
    previous = dim;
  }
  CHECK(nonzero);
}

TEST_CASE("property: graded pieces add up to the report") {
  for (const IntMatrix& g : {kNonCmSample, kRectangleSurface}) {
    const auto s = build_semigroup(g);
    const long long b = 5;
    const auto r = analyze_cohomology(s, with_bound(b));
    const auto box = analysis_box(s, b);
    CHECK(box.size() == r.box_points);
    for (int i = 0; i < static_cast<int>(s.rank()); ++i) {
      std::size_t total = 0;
      for (const IntVector& x : box) total += graded_piece_dimension(s, i, x).dimension;
      CHECK(total == r.levels[static_cast<std::size_t>(i)].dimension_in_box);
    }
  }
}

TEST_CASE("property: H^1 vanishes exactly on random pointed semigroups") {
  std::mt19937_64 rng(test_seed() + 5);
  std::uniform_int_distribution<std::size_t> dim(2, 4), count(2, 6);
  int runs = 0;
  while (runs < 100) {
    const IntMatrix g = random_generators(rng, count(rng), dim(rng), 5);
    const auto s = build_semigroup(g);
    if (s.rank() < 2) continue;
    ++runs;
    CAPTURE(to_string(g));
    const auto r = analyze_cohomology(s, with_bound(3));
    CHECK(r.levels[0].verdict == LevelVerdict::ZeroExact);
    CHECK(r.levels[1].verdict == LevelVerdict::ZeroExact);
  }
}

TEST_CASE("property: standard orthant semigroups take the fast path") {
  std::mt19937_64 rng(test_seed() + 6);
  std::uniform_int_distribution<std::size_t> rank(1, 4), extra(0, 4);
  std::uniform_int_distribution<int> scale(1, 3), entry(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = rank(rng);
    IntMatrix g(0, r);
    for (std::size_t i = 0; i < r; ++i) {
      IntVector v(r);
      v[i] = scale(rng);
      g.append_row(v);
    }
    for (std::size_t k = extra(rng); k > 0; --k) {
      IntVector v(r);
      for (auto& e : v) e = entry(rng);
      if (!is_zero(v)) g.append_row(v);
    }
    CAPTURE(to_string(g));
    const auto s = build_semigroup(g);
    REQUIRE(is_standard(s).standard());
    CHECK(s.num_facets() == r);
    const auto r_ = analyze_cohomology(s);
    CHECK(non_faces(r_.pi, r >= 2 ? r - 2 : 0).empty());
    CHECK(cm_verdict(r_).kind == CmKind::CohenMacaulayExact);
  }
}

TEST_CASE("property: permutation equivariance") {
  std::mt19937_64 rng(test_seed() + 7);
  for (const IntMatrix& g : {kNonCmSample, kRectangleSurface, pentagon_surfaces()[1].generators}) {
    const auto base = analyze_cohomology(build_semigroup(g), with_bound(6));
    const auto base_verdict = cm_verdict(base);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::size_t> rows(g.rows()), cols(g.cols());
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      const IntMatrix h = permute_columns(permute_rows(g, rows), cols);
      CAPTURE(to_string(h));
      const auto r = analyze_cohomology(build_semigroup(h), with_bound(6));
      CHECK(shape(r) == shape(base));
      CHECK(cm_verdict(r).kind == base_verdict.kind);
      for (std::size_t i = 0; i < r.levels.size(); ++i) {
        CHECK(r.levels[i].verdict == base.levels[i].verdict);
        CHECK(r.levels[i].dimension_in_box == base.levels[i].dimension_in_box);
      }
    }
  }
}

TEST_CASE("Goto-Watanabe comparison") {
  CHECK_THROWS_WITH_AS(goto_watanabe_check(build_semigroup(kQuarticCurve)),
                       "not a toric surface in P4", InputError);
  CHECK_THROWS_AS(goto_watanabe_check(build_semigroup(kPolynomialRing3)), InputError);

  const auto tri = goto_watanabe_check(build_semigroup(kTriangleSurface));
  CHECK(tri.sprime_minus_s.empty());
  CHECK(tri.cm.kind == CmKind::CohenMacaulayExact);
  CHECK(tri.consistent);

  const auto rect = goto_watanabe_check(build_semigroup(kRectangleSurface), Integer(9),
                                        with_bound(12));
  CHECK(rect.degree == 9);
  CHECK(rect.sprime_minus_s.empty());
  CHECK(rect.cm.kind == CmKind::CohenMacaulayUpToBound);
  CHECK(rect.conclusion == "consistent");
}

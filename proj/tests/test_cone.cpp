#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"

#include "sgcm/cone.hpp"
#include "sgcm/error.hpp"

#include <random>
#include <set>

using namespace sgcm;

namespace {

std::set<IntVector> facet_values(const PolyCone& cone) {
  std::set<IntVector> out;
  for (std::size_t i = 0; i < cone.num_facets(); ++i)
    out.insert(make_primitive(cone.generators * cone.facet_normals.row(i)));
  return out;
}

}  // namespace

TEST_CASE("cone of the quartic curve is the quadrant") {
  const PolyCone c = cone_from_generators({{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  REQUIRE(c.num_facets() == 2);
  CHECK(c.facet_normals == IntMatrix{{0, 1}, {1, 0}});
  CHECK(c.incidence[0] == std::vector<std::size_t>{0});
  CHECK(c.incidence[1] == std::vector<std::size_t>{3});
  CHECK(is_pointed(c));
  CHECK(strictly_positive_functional(c) == IntVector{1, 1});
}

TEST_CASE("cone over the standard basis") {
  const PolyCone c = cone_from_generators(IntMatrix::identity(3));
  REQUIRE(c.num_facets() == 3);
  CHECK(c.facet_normals == IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  for (const auto& inc : c.incidence) CHECK(inc.size() == 2);
  CHECK(strictly_positive_functional(c) == IntVector{1, 1, 1});
}

TEST_CASE("cone over a triangle with extra points has three facets") {
  const PolyCone c =
      cone_from_generators({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}, {2, 1, 0}});
  CHECK(c.num_facets() == 3);
  // (1,1,1) is interior, (2,1,0) lies on the facet x_3 = 0.
  for (std::size_t f = 0; f < c.num_facets(); ++f)
    for (std::size_t g : c.incidence[f]) CHECK(g != 3);
}

TEST_CASE("cone over the unit-height rectangle") {
  const IntMatrix gens{{0, 0, 3}, {2, 0, 1}, {0, 1, 2}, {2, 1, 0}, {1, 0, 2}};
  const PolyCone c = cone_from_generators(gens);
  CHECK(c.num_facets() == 4);
  CHECK(c.facet_normals == IntMatrix{{-1, 2, 2}, {0, 1, 0}, {1, -2, 1}, {1, 0, 0}});
  CHECK(facet_values(c) == test::brute_force_facet_values(gens));
  const IntVector w = strictly_positive_functional(c);
  for (std::size_t g = 0; g < gens.rows(); ++g) CHECK(dot(w, gens.row(g)) > 0);
}

TEST_CASE("pointedness") {
  const PolyCone line = cone_from_generators({{1, 0}, {-1, 0}});
  CHECK_FALSE(is_pointed(line));
  CHECK(line.num_facets() == 0);
  CHECK_THROWS_AS(strictly_positive_functional(line), UnsupportedError);

  const PolyCone half_plane = cone_from_generators({{1, 0}, {-1, 0}, {0, 1}});
  CHECK_FALSE(is_pointed(half_plane));
  CHECK(half_plane.num_facets() == 1);

  const PolyCone pentagon =
      cone_from_generators({{0, 0, 3}, {1, 0, 2}, {2, 1, 0}, {1, 2, 0}, {0, 1, 2}});
  CHECK(is_pointed(pentagon));
  CHECK(pentagon.num_facets() == 5);
  const IntVector w = strictly_positive_functional(pentagon);
  for (std::size_t g = 0; g < 5; ++g) CHECK(dot(w, pentagon.generators.row(g)) > 0);
}

TEST_CASE("cones that are not full dimensional") {
  // Quartic curve placed in the plane x_3 = x_1 of Z^3.
  const PolyCone c = cone_from_generators({{4, 0, 4}, {3, 1, 3}, {1, 3, 1}, {0, 4, 0}});
  CHECK(c.dimension() == 2);
  REQUIRE(c.num_facets() == 2);
  CHECK(is_pointed(c));
  // Functionals take the value 1 on the saturated span lattice.
  CHECK(c.facet_normals == IntMatrix{{0, 0, 1}, {0, 1, 0}});
  CHECK(c.facet_values({1, 0, 1}) == IntVector{1, 0});
  CHECK(c.facet_values({0, 1, 0}) == IntVector{0, 1});
  for (std::size_t i = 0; i < 2; ++i) CHECK(content(c.facet_normals.row(i)) == 1);
}

TEST_CASE("zero and empty generator lists are rejected") {
  CHECK_THROWS_AS(cone_from_generators(IntMatrix(0, 2)), InputError);
  CHECK_THROWS_AS(cone_from_generators({{1, 0}, {0, 0}}), InputError);
}

TEST_CASE("property: double description agrees with brute-force facets") {
  std::mt19937_64 rng(test::test_seed() + 1);
  std::uniform_int_distribution<std::size_t> dim(1, 4), count(1, 6);
  int full = 0, deficient = 0, nonpointed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = dim(rng), k = count(rng);
    IntMatrix gens = test::random_matrix(rng, k, n, -3, 3);
    for (std::size_t r = 0; r < k; ++r)
      if (gens.is_zero_row(r)) gens(r, 0) = 1;
    CAPTURE(to_string(gens));
    const PolyCone c = cone_from_generators(gens);
    CHECK(facet_values(c) == test::brute_force_facet_values(gens));
    (c.dimension() == n ? full : deficient)++;
    if (!is_pointed(c)) ++nonpointed;

    for (std::size_t f = 0; f < c.num_facets(); ++f) {
      CHECK(content(c.facet_normals.row(f)) == 1);
      if (f > 0) CHECK(c.facet_normals.row(f - 1) < c.facet_normals.row(f));
      std::vector<std::size_t> on;
      for (std::size_t g = 0; g < k; ++g) {
        const Integer v = dot(c.facet_normals.row(f), gens.row(g));
        CHECK(v >= 0);
        if (v == 0) on.push_back(g);
      }
      CHECK(on == c.incidence[f]);
      // A facet of an r-dimensional cone spans an (r-1)-dimensional space.
      CHECK(rational_rank(gens.select_rows(on)) + 1 == c.dimension());
    }
    if (is_pointed(c))
      CHECK(rational_rank(c.facet_normals * c.span_basis.transpose()) == c.dimension());
  }
  CHECK(full > 0);
  CHECK(deficient > 0);
  CHECK(nonpointed > 0);
}

#pragma once

#include "sgcm/int_matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sgcm::test {

/// Generators (x, y, d - x - y) of the projective toric surface spanned by the
/// given lattice points of a polygon, homogenized at degree d.
inline IntMatrix homogenize(const std::vector<std::pair<int, int>>& points, int d) {
  IntMatrix m(0, 3);
  for (auto [x, y] : points) m.append_row({x, y, d - x - y});
  return m;
}

struct Fixture {
  std::string name;
  IntMatrix generators;
};

inline const IntMatrix kQuarticCurve{{4, 0}, {3, 1}, {1, 3}, {0, 4}};
inline const IntMatrix kPolynomialRing3 = IntMatrix::identity(3);
inline const IntMatrix kTriangleSurface{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}, {2, 1, 0}};
inline const IntMatrix kRectangleSurface{{0, 0, 3}, {2, 0, 1}, {0, 1, 2}, {2, 1, 0}, {1, 0, 2}};
/// Rank 3, six facets; k[S'] has H^2 in degree (1,1,1).
inline const IntMatrix kNonCmSample{{0, 2, 1}, {3, 1, 2}, {0, 1, 0}, {3, 2, 3}, {2, 2, 1}, {2, 3, 3}};

/// Toric surfaces in P^4 whose cone has four facets.
inline std::vector<Fixture> quadrilateral_surfaces() {
  return {
      {"rectangle", kRectangleSurface},
      {"trapezoid", homogenize({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}, 2)},
      {"diamond", homogenize({{1, 0}, {2, 1}, {1, 2}, {0, 1}, {1, 1}}, 3)},
      {"long-trapezoid", homogenize({{0, 0}, {3, 0}, {0, 1}, {1, 1}, {1, 0}}, 3)},
      {"square", homogenize({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}, 4)},
  };
}

/// Toric surfaces in P^4 whose cone has five facets (lattice pentagons).
inline std::vector<Fixture> pentagon_surfaces() {
  return {
      {"pentagon-a", homogenize({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}}, 3)},
      {"pentagon-b", homogenize({{0, 0}, {2, 0}, {3, 1}, {1, 2}, {0, 1}}, 4)},
      {"pentagon-c", homogenize({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 1}}, 3)},
      {"pentagon-d", homogenize({{1, 0}, {3, 0}, {4, 2}, {2, 3}, {0, 2}}, 6)},
  };
}

}  // namespace sgcm::test

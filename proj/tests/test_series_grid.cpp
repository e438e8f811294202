#include <algorithm>

#include "doctest.h"

#include "adehk/field.hpp"
#include "adehk/series_engine.hpp"
#include "adehk/syzygy_oracle.hpp"

using namespace adehk;

namespace {

void check_grid(const AdeRingSpec& ring) {
  const HypersurfaceSpec h = HypersurfaceSpec::from_ring(ring);
  std::vector<long> den{h.beta, h.gamma};
  std::sort(den.begin(), den.end());
  for (std::uint32_t p : {7u, 11u, 13u})
    for (long a = 1; a <= 9; ++a)
      for (long b = 1; b <= 9; ++b)
        for (long c = 1; c <= 9; ++c) {
          const RationalSeries s = syzygy_series({h, a, b, c}, p);
          // The final division by (1 - t^{alpha d}) cancels completely.
          REQUIRE(s.denominator_weights() == den);
          const std::vector<GaussPoly> gens{GaussPoly(ZPoly::var(0, static_cast<unsigned>(a))),
                                            GaussPoly(ZPoly::var(1, static_cast<unsigned>(b))),
                                            GaussPoly(ZPoly::var(2, static_cast<unsigned>(c)))};
          REQUIRE_MESSAGE(series_coefficients(s, 200) ==
                              syzygy_graded_dimensions(FieldFq(p), GaussPoly(ring.F), gens, ring.order(), 200),
                          ring.selector() << " p=" << p << " (" << a << "," << b << "," << c << ")");
        }
}

}  // namespace

TEST_CASE("E6 grid") { check_grid(make_ring(Family::E6)); }
TEST_CASE("E7 grid") { check_grid(make_ring(Family::E7)); }
TEST_CASE("E8 grid") { check_grid(make_ring(Family::E8)); }
TEST_CASE("A grid") {
  for (int n = 1; n <= 4; ++n) check_grid(make_ring(Family::A, n));
}
TEST_CASE("D grid") {
  for (int n = 2; n <= 4; ++n) check_grid(make_ring(Family::D, n));
}

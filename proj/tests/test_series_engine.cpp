#include <algorithm>

#include "doctest.h"

#include "adehk/catalog.hpp"
#include "adehk/field.hpp"
#include "adehk/rat.hpp"
#include "adehk/series_engine.hpp"
#include "adehk/syzygy_oracle.hpp"

using namespace adehk;

namespace {

RationalSeries rs(const char* num, std::vector<long> den) { return RationalSeries(IntPoly::parse(num), std::move(den)); }

const HypersurfaceSpec kE8 = HypersurfaceSpec::from_ring(make_ring(Family::E8));
const RationalSeries kM1 = rs("t^16+t^21+t^25+t^30", {10, 6});
const RationalSeries kM8 = rs("t^22+t^25+t^27+t^30", {10, 6});

std::vector<AdeRingSpec> shipped_rings() {
  std::vector<AdeRingSpec> out{make_ring(Family::E6), make_ring(Family::E7), make_ring(Family::E8)};
  for (int n = 1; n <= 4; ++n) out.push_back(make_ring(Family::A, n));
  for (int n = 2; n <= 4; ++n) out.push_back(make_ring(Family::D, n));
  return out;
}

std::vector<std::int64_t> oracle(const AdeRingSpec& ring, long a, long b, long c, std::uint32_t p, long deg) {
  const std::vector<GaussPoly> gens{GaussPoly(ZPoly::var(0, static_cast<unsigned>(a))),
                                    GaussPoly(ZPoly::var(1, static_cast<unsigned>(b))),
                                    GaussPoly(ZPoly::var(2, static_cast<unsigned>(c)))};
  return syzygy_graded_dimensions(FieldFq(p), GaussPoly(ring.F), gens, ring.order(), deg);
}

}  // namespace

TEST_CASE("hypersurface shapes") {
  CHECK(kE8.d == 2);
  CHECK(kE8.alpha == 15);
  CHECK(kE8.beta == 10);
  CHECK(kE8.gamma == 6);
  CHECK(kE8.shape == HypersurfaceSpec::Shape::Binomial);
  CHECK(kE8.degF() == 30);
  const auto e7 = HypersurfaceSpec::from_ring(make_ring(Family::E7));
  CHECK(e7.shape == HypersurfaceSpec::Shape::YTimesBinomial);
  const auto a3 = HypersurfaceSpec::from_ring(make_ring(Family::A, 3));
  CHECK(a3.shape == HypersurfaceSpec::Shape::Monomial);
  CHECK(a3.d == 4);
}

TEST_CASE("base splits") {
  CHECK(base_split(kE8, 7, 1, 1, 1) == std::pair<long, long>{16, 30});
  const auto [m, n] = base_split(kE8, 61, 30, 61, 61);
  CHECK(n - m == 4);
  // Koszul-degenerate branch: q_pow d alpha >= b beta + c gamma.
  const auto [m2, n2] = base_split(kE8, 7, 3, 2, 3);
  CHECK(n2 - m2 == 90 - 20 - 18);
}

TEST_CASE("lifting to the hypersurface") {
  CHECK(lift_to_hypersurface(rs("t^16+t^30", {10, 6}), kE8) == rs("t^16+t^30+t^31+t^45", {10, 6}));
  HypersurfaceSpec d1 = kE8;
  d1.d = 1;
  CHECK(lift_to_hypersurface(kM1, d1) == kM1);
  CHECK(lift_to_hypersurface(RationalSeries::free_algebra({10, 6}), kE8) == ring_series(kE8));
}

TEST_CASE("common factor rewriting") {
  // (Y^m g^m, Y^b, Z^c) -> (g^m, Y^{b-m}, Z^c)
  const Rewritten r = rewrite_common_factor(kE8, {{2, 0, 2}, {5, 0, 0}, {0, 4, 0}});
  CHECK(r.gens == std::vector<FactoredGen>{{0, 0, 2}, {3, 0, 0}, {0, 4, 0}});
  CHECK(r.shift == 2 * 10);
  // (f f1, f f2, f f3) -> (f1, f2, f3)
  const Rewritten all = rewrite_common_factor(kE8, {{1, 1, 1}, {2, 1, 1}, {1, 3, 1}});
  CHECK(all.gens == std::vector<FactoredGen>{{0, 0, 0}, {1, 0, 0}, {0, 2, 0}});
  CHECK(all.shift == 10 + 6 + 30);
  const Rewritten none = rewrite_common_factor(kE8, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK(none.shift == 0);
  CHECK(none.gens == std::vector<FactoredGen>{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("recursion step") {
  const RationalSeries hr = ring_series(kE8);
  const RationalSeries h_low(hr.numerator() * IntPoly::parse("t^6+t^10"), hr.denominator_weights());
  const RationalSeries h_high = lift_to_hypersurface(rs("t^16+t^30", {10, 6}), kE8);
  CHECK(recursion_step(1, kE8, h_low, h_high) == kM1);
  CHECK(recursion_step(4, kE8, kM8, kM1) == kM8);  // r = 0
}

TEST_CASE("syzygy series of the Frobenius powers of the maximal ideal") {
  const RationalSeries s1 = syzygy_series({kE8, 1, 1, 1}, 10007);
  CHECK(s1 == kM1);
  CHECK(s1.str() == kM1.str());
  const RationalSeries hr = ring_series(kE8);
  CHECK(syzygy_series({kE8, 2, 2, 2}, 2) == hr.times(IntPoly::parse("t^30+t^32")));
  const RationalSeries s7 = syzygy_series({kE8, 7, 7, 7}, 7);
  CHECK(s7 == kM8.shifted(90));
  CHECK(s7.str() == kM8.shifted(90).str());
}

TEST_CASE("classification of series") {
  const AdeRingSpec e8 = make_ring(Family::E8);
  const auto& cat = catalog_series(e8, 7);
  const RationalSeries hr = ring_series(kE8);
  const Classification c1 = classify(kM1, hr, cat);
  CHECK(c1.kind == Classification::Kind::Indecomposable);
  CHECK(c1.index == 1);
  CHECK(c1.shift == 0);
  const Classification c7 = classify(syzygy_series({kE8, 7, 7, 7}, 7), hr, cat);
  CHECK(c7.index == 8);
  CHECK(c7.shift == 90);
  const Classification fs = classify(hr.times(IntPoly::parse("t^30+t^32")), hr, cat);
  CHECK(fs.kind == Classification::Kind::FreeSplit);
  CHECK(fs.m == 30);
  CHECK(fs.n == 32);
  CHECK(classify(rs("t^3", {10, 6}), hr, cat).kind == Classification::Kind::Unknown);
}

TEST_CASE("Frobenius powers on E8 land on M_1 or M_8 with the predicted twist") {
  const AdeRingSpec e8 = make_ring(Family::E8);
  const RationalSeries hr = ring_series(kE8);
  int checked = 0;
  for (std::uint32_t p = 7; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    const auto& cat = catalog_series(e8, p);
    for (unsigned e = 1; e <= 2; ++e) {
      const long q = to_int64(ipow(BigInt(p), e));
      const long r = q % 30;
      const Classification c = classify(syzygy_series({kE8, q, q, q}, p), hr, cat);
      REQUIRE(c.kind == Classification::Kind::Indecomposable);
      if (r == 1 || r == 29 || r == 11 || r == 19) {
        CHECK(c.index == 1);
        CHECK(c.shift == 31 * (q - 1) / 2);
      } else {
        REQUIRE((r == 7 || r == 23 || r == 13 || r == 17));
        CHECK(c.index == 8);
        CHECK(c.shift == 31 * (q - 1) / 2 - 3);
      }
      ++checked;
    }
  }
  CHECK(checked == 2 * 22);
}

TEST_CASE("truncated series agree with the linear-algebra oracle on small exponents") {
  for (const AdeRingSpec& ring : shipped_rings()) {
    const HypersurfaceSpec h = HypersurfaceSpec::from_ring(ring);
    for (std::uint32_t p : {7u, 13u})
      for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
          for (long c = 1; c <= 3; ++c)
            REQUIRE_MESSAGE(series_coefficients(syzygy_series({h, a, b, c}, p), 200) == oracle(ring, a, b, c, p, 200),
                            ring.selector() << " p=" << p << " (" << a << "," << b << "," << c << ")");
  }
}

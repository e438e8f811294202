#include "doctest.h"
#include "gen.hpp"

#include "adehk/error.hpp"
#include "adehk/groebner.hpp"
#include "adehk/ring.hpp"
#include "adehk/syzygy_oracle.hpp"

using namespace adehk;

namespace {

PolyFp fp(const char* text, std::uint32_t p, const VarSet& vars = VarSet::xyz()) {
  return PolyFp(ZPoly::parse(text, vars), p, vars.size());
}

std::uint64_t colength(const std::vector<PolyFp>& gens, const WeightedOrder& order) {
  auto d = quotient_dimension(buchberger(gens, order));
  REQUIRE(d.has_value());
  return *d;
}

/// Random homogeneous form of weighted degree m in k[Y,Z], never zero.
PolyFp random_form(gen::Rng& rng, std::uint32_t p, const WeightedOrder& order, long m) {
  const auto monos = monomials_of_degree(order, m);
  PolyFp f(p, 2);
  while (f.is_zero())
    for (Mono mo : monos)
      if (rng.coin()) f.add_term(mo, static_cast<std::uint32_t>(rng.uniform(1, p - 1)));
  return f;
}

}  // namespace

TEST_CASE("reduced bases of small ideals") {
  const WeightedOrder w111({1, 1, 1});
  const auto gb = buchberger({fp("X", 7), fp("Y", 7), fp("Z", 7)}, w111);
  CHECK(gb.generators.size() == 3);
  CHECK(quotient_dimension(gb) == 1u);
  const auto yz = buchberger({fp("Y^3", 5, VarSet::yz()), fp("Z^2", 5, VarSet::yz())}, WeightedOrder({1, 1}));
  CHECK(yz.generators.size() == 2);
  CHECK(quotient_dimension(yz) == 6u);
}

TEST_CASE("colengths match known Hilbert-Kunz values") {
  // A_1 over F_3: (3/2) 9 - 1 + 1/2 = 13, under several orders.
  for (const auto& w : {std::vector<int>{2, 3, 3}, std::vector<int>{1, 1, 1}, std::vector<int>{1, 2, 3}})
    CHECK(colength({fp("X^2-YZ", 3), fp("X^3", 3), fp("Y^3", 3), fp("Z^3", 3)}, WeightedOrder(w)) == 13u);
  CHECK(colength({fp("X^2+Y^3+Z^5", 2), fp("X^2", 2), fp("Y^2", 2), fp("Z^2", 2)}, WeightedOrder({15, 10, 6})) == 8u);
}

TEST_CASE("infinite quotients are reported") {
  CHECK_FALSE(quotient_dimension(buchberger({fp("X^2", 5), fp("Y", 5)}, WeightedOrder({1, 1, 1}))).has_value());
}

TEST_CASE("graded dimensions") {
  const AdeRingSpec e8 = make_ring(Family::E8);
  const auto gb = buchberger({PolyFp(e8.F, 7, 3)}, e8.order());
  const auto dims = graded_dimensions(gb, e8.order(), 16);
  for (long m = 0; m <= 16; ++m) {
    const bool hit = m == 0 || m == 6 || m == 10 || m == 12 || m == 15 || m == 16;
    CHECK_MESSAGE(dims[static_cast<std::size_t>(m)] == (hit ? 1 : 0), "m = " << m);
  }
  const auto pt = graded_dimensions(buchberger({fp("Y", 3), fp("Z", 3), fp("X", 3)}, WeightedOrder({3, 5, 7})),
                                    WeightedOrder({3, 5, 7}), 8);
  CHECK(pt == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto free = graded_standard_counts({}, WeightedOrder({1, 1}), 6);
  for (long m = 0; m <= 6; ++m) CHECK(free[static_cast<std::size_t>(m)] == m + 1);
}

TEST_CASE("syzygy dimensions") {
  const WeightedOrder yz({10, 6});
  const auto kos = syzygy_graded_dimensions(std::nullopt, {fp("Y", 7, VarSet::yz()), fp("Z", 7, VarSet::yz())}, yz, 20);
  for (long m = 0; m < 16; ++m) CHECK(kos[static_cast<std::size_t>(m)] == 0);
  CHECK(kos[16] == 1);

  const AdeRingSpec e8 = make_ring(Family::E8);
  const auto m1 = syzygy_graded_dimensions(FieldFq(7), GaussPoly(e8.F),
                                           {GaussPoly::parse("X"), GaussPoly::parse("Y"), GaussPoly::parse("Z")},
                                           e8.order(), 120);
  const RationalSeries h(IntPoly::parse("t^16+t^21+t^25+t^30"), {10, 6});
  CHECK(m1 == series_coefficients(h, 120));
}

TEST_CASE("rank-two splits in two variables") {
  const WeightedOrder yz({10, 6});
  const VarSet v = VarSet::yz();
  CHECK(split_degrees_rank2({fp("Y^3+Z^5", 7, v), fp("Y", 7, v), fp("Z", 7, v)}, yz) == std::pair<long, long>{16, 30});
  const PolyFp g = fp("Y^3+Z^5", 61, v).pow(30);
  const auto [m, n] = split_degrees_rank2({g, fp("Y^61", 61, v), fp("Z^61", 61, v)}, yz);
  CHECK(n - m == 4);
  CHECK(m + n == 900 + 610 + 366);
  CHECK(split_degrees_rank2({fp("Y", 5, v), fp("Z", 5, v), fp("Y+Z", 5, v)}, WeightedOrder({1, 1})) ==
        std::pair<long, long>{1, 2});
}

TEST_CASE("property: degree-sum identity m + n = d1 + d2 + d3") {
  gen::Rng rng(0x6b01);
  int checked = 0;
  for (int trial = 0; checked < 200 && trial < 2000; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11, 13}[static_cast<std::size_t>(rng.uniform(0, 4))];
    const WeightedOrder order = rng.coin() ? WeightedOrder({1, 1}) : WeightedOrder({2, 3});
    std::vector<PolyFp> gens;
    long total = 0;
    for (int k = 0; k < 3; ++k) {
      long d = 0;
      while (monomials_of_degree(order, d = rng.uniform(1, 12)).empty()) {
      }
      gens.push_back(random_form(rng, p, order, d));
      total += d;
    }
    if (!quotient_dimension(buchberger(gens, order))) continue;
    const auto [m, n] = split_degrees_rank2(gens, order);
    REQUIRE(m <= n);
    REQUIRE(m + n == total);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("property: colength does not depend on the order's weights") {
  gen::Rng rng(0x6b02);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[static_cast<std::size_t>(rng.uniform(0, 3))];
    const AdeRingSpec ring = std::vector<AdeRingSpec>{make_ring(Family::E6), make_ring(Family::E7), make_ring(Family::E8),
                                                      make_ring(Family::A, 2), make_ring(Family::D, 3)}[static_cast<std::size_t>(rng.uniform(0, 4))];
    std::vector<PolyFp> gens{PolyFp(ring.F, p, 3)};
    for (int v = 0; v < 3; ++v)
      gens.push_back(PolyFp::term(p, 3, 1, mono::single(v, static_cast<unsigned>(rng.uniform(1, 7)))));
    const auto a = quotient_dimension(buchberger(gens, ring.order()));
    const auto b = quotient_dimension(buchberger(gens, WeightedOrder({1, 1, 1})));
    const auto c = quotient_dimension(buchberger(gens, WeightedOrder({5, 2, 3})));
    REQUIRE(a.has_value());
    REQUIRE(a == b);
    REQUIRE(a == c);
  }
}

TEST_CASE("property: every input reduces to zero modulo its basis") {
  gen::Rng rng(0x6b03);
  const WeightedOrder order({1, 1, 1});
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 11}[static_cast<std::size_t>(rng.uniform(0, 4))];
    std::vector<PolyFp> gens;
    const int k = static_cast<int>(rng.uniform(1, 4));
    for (int i = 0; i < k; ++i) {
      PolyFp f(p, 3);
      const int terms = static_cast<int>(rng.uniform(1, 4));
      for (int t = 0; t < terms; ++t) {
        const Mono m = mono::make({static_cast<unsigned>(rng.uniform(0, 3)), static_cast<unsigned>(rng.uniform(0, 3)),
                                   static_cast<unsigned>(rng.uniform(0, 3))});
        f.add_term(m, static_cast<std::uint32_t>(rng.uniform(1, p - 1)));
      }
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    const auto gb = buchberger(gens, order);
    for (const auto& g : gens) REQUIRE(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("buchberger rejects bad input") {
  CHECK_THROWS_AS(buchberger({fp("X", 4)}, WeightedOrder({1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(buchberger({fp("X", 5), fp("X", 7)}, WeightedOrder({1, 1, 1})), std::invalid_argument);
}

// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "gen.hpp"

#include "adehk/catalog.hpp"
#include "adehk/field.hpp"
#include "adehk/groebner.hpp"
#include "adehk/han_delta.hpp"
#include "adehk/hk.hpp"
#include "adehk/matrix_factorization.hpp"
#include "adehk/series_engine.hpp"
#include "adehk/syzygy_oracle.hpp"

using namespace adehk;

namespace {

int failures = 0;

void report(const std::string& label, bool ok, const std::string& detail) {
  std::printf("%s %s%s\n", ok ? "PASS" : "FAIL", label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

/// Runs `body`, turning exceptions into a FAIL with the message.
void criterion(int k, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << " exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char tail[32];
  std::snprintf(tail, sizeof tail, " [%.1fs]", secs);
  report("criterion " + std::to_string(k) + ":", ok, detail.str() + tail);
}

std::string s(const BigInt& v) { return v.get_str(); }

bool closed_equals_oracle(const AdeRingSpec& ring, std::uint32_t p, unsigned e, std::ostringstream& d) {
  const BigInt c = hk_closed_form(ring, p, e);
  const BigInt o = hk_oracle(ring, p, e);
  if (c != o) d << " " << ring.selector() << " p=" << p << " e=" << e << ": closed " << s(c) << " oracle " << s(o) << ";";
  return c == o;
}

std::vector<GaussPoly> monomial_gens(long a, long b, long c) {
  return {GaussPoly(ZPoly::var(0, static_cast<unsigned>(a))), GaussPoly(ZPoly::var(1, static_cast<unsigned>(b))),
          GaussPoly(ZPoly::var(2, static_cast<unsigned>(c)))};
}

PolyFp random_form(gen::Rng& rng, std::uint32_t p, const WeightedOrder& order, long m) {
  const auto monos = monomials_of_degree(order, m);
  PolyFp f(p, 2);
  while (f.is_zero())
    for (Mono mo : monos)
      if (rng.coin()) f.add_term(mo, static_cast<std::uint32_t>(rng.uniform(1, p - 1)));
  return f;
}

RatTriple scaled(const RatTriple& t, long p) { return {t[0] * Rat(p), t[1] * Rat(p), t[2] * Rat(p)}; }

}  // namespace

int main() {
  const AdeRingSpec e6 = make_ring(Family::E6), e7 = make_ring(Family::E7), e8 = make_ring(Family::E8);

  criterion(1, [&](std::ostringstream& d) {
    bool ok = true;
    double worst = 0;
    for (std::uint32_t p : {7u, 11u, 13u, 29u, 31u}) {
      const auto t0 = std::chrono::steady_clock::now();
      ok = closed_equals_oracle(e8, p, 1, d) && ok;
      worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      if (p == 7) ok = ok && hk_closed_form(e8, 7, 1) == 96;
    }
    ok = ok && worst < 10;
    d << " E8 HK closed form = oracle for p in {7,11,13,29,31}, HK(7) = " << s(hk_closed_form(e8, 7, 1))
      << ", slowest point " << worst << "s";
    return ok;
  });

  criterion(2, [&](std::ostringstream& d) {
    bool ok = true;
    d << " E8 p=2:";
    for (unsigned e = 1; e <= 3; ++e) {
      const BigInt want = BigInt(2) * ipow(BigInt(2), 2 * e);
      const BigInt closed = hk_closed_form(e8, 2, e);
      const FormulaRoute lr = hk_via_frobenius_class(e8, 2, e);
      const BigInt oracle = hk_oracle(e8, 2, e);
      ok = ok && closed == want && lr.value == Rat(want) && lr.route == HkRoute::SplitFormula && oracle == want;
      d << " e=" << e << " closed " << s(closed) << " split formula " << lr.value.str() << " oracle " << s(oracle) << ";";
    }
    return ok;
  });

  criterion(3, [&](std::ostringstream& d) {
    bool ok = true;
    int n_checked = 0;
    for (int n = 1; n <= 4; ++n)
      for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        if ((n + 1) % static_cast<int>(p) == 0) continue;
        for (unsigned e = 1; e <= 2; ++e) {
          ok = closed_equals_oracle(make_ring(Family::A, n), p, e, d) && ok;
          ++n_checked;
        }
      }
    d << " Kunz formula = oracle on " << n_checked << " (A_n, p, e) points";
    return ok;
  });

  criterion(4, [&](std::ostringstream& d) {
    bool ok = true;
    int n_checked = 0, findings = 0;
    for (int n = 2; n <= 4; ++n)
      for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const bool divides = (4 * n) % static_cast<int>(p) == 0;
        std::ostringstream local;
        const bool same = closed_equals_oracle(make_ring(Family::D, n), p, 1, local);
        ++n_checked;
        if (!same && divides) {
          ++findings;
          d << " finding:" << local.str();
        }
        if (!same && !divides) {
          ok = false;
          d << local.str();
        }
      }
    d << " D closed form = oracle on " << n_checked << " points, " << findings << " findings at p | 4n";
    return ok;
  });

  criterion(5, [&](std::ostringstream& d) {
    bool ok = true;
    for (const auto& ring : {e6, e7})
      for (std::uint32_t p : {5u, 7u, 11u, 13u})
        for (unsigned e = 1; e <= 2; ++e) ok = closed_equals_oracle(ring, p, e, d) && ok;
    // E7: p = 5 falls in the -71/48 case, p = 7 in the -47/48 case.
    const bool c71 = hk_closed_form(e7, 5, 1) == (95 * 25 - 71) / 48;
    const bool c47 = hk_closed_form(e7, 7, 1) == (95 * 49 - 47) / 48;
    d << " E6/E7 closed form = oracle for p in {5,7,11,13}, e in {1,2}; E7 p=5 -71/48 case "
      << (c71 ? "ok" : "wrong") << ", p=7 -47/48 case " << (c47 ? "ok" : "wrong");
    return ok && c71 && c47;
  });

  criterion(6, [&](std::ostringstream& d) {
    const RatTriple t{Rat(30), Rat(31, 3), Rat(31, 5)};
    const Rat dv = delta({61, t});
    const LatticePoint lp = odd_lattice_distance(t);
    d << " delta_61(30, 31/3, 31/5) = " << dv.str() << " (want 2/15), lattice distance " << lp.dist.str()
      << " (want 13/15)";
    return dv == Rat(2, 15) && lp.dist == Rat(13, 15);
  });
  {
    const RatTriple t{Rat(30), Rat(61, 3), Rat(61, 5)};
    const Rat dv = delta({61, t});
    const LatticePoint lp = odd_lattice_distance(t);
    const Rat tv = tau({61, 10, 6, 3, 5, {Rat(30), Rat(61), Rat(61)}});
    std::ostringstream d;
    d << " delta_61(30, 61/3, 61/5) = " << dv.str() << ", lattice distance " << lp.dist.str() << ", tau_61(30, 61, 61) = "
      << tv.str();
    report("supplementary 6:", dv == Rat(2, 15) && lp.dist == Rat(13, 15) && tv == Rat(4), d.str());
  }

  criterion(7, [&](std::ostringstream& d) {
    const HypersurfaceSpec h = HypersurfaceSpec::from_ring(e8);
    const RationalSeries m1(IntPoly::parse("t^16+t^21+t^25+t^30"), {10, 6});
    const RationalSeries m8(IntPoly::parse("t^22+t^25+t^27+t^30"), {10, 6});
    const RationalSeries s1 = syzygy_series({h, 1, 1, 1}, 10007);
    const auto& cat = catalog_series(e8, 10007);
    const RationalSeries* s8 = nullptr;
    for (const auto& c : cat)
      if (c.index == 8) s8 = &c.series;
    d << " Syz(X,Y,Z) = " << s1.str() << "; H_{M_8} = " << (s8 ? s8->str() : "missing");
    return s1 == m1 && s1.str() == m1.str() && s8 && *s8 == m8 && s8->str() == m8.str();
  });

  criterion(8, [&](std::ostringstream& d) {
    gen::Rng rng(0xacce58);
    bool ok = true;
    int n_checked = 0;
    for (const auto& ring : {e8, e6, e7}) {
      const HypersurfaceSpec h = HypersurfaceSpec::from_ring(ring);
      for (int k = 0; k < 100; ++k) {
        const long a = rng.uniform(1, 9), b = rng.uniform(1, 9), c = rng.uniform(1, 9);
        for (std::uint32_t p : {7u, 11u}) {
          const auto series = series_coefficients(syzygy_series({h, a, b, c}, p), 200);
          const auto oracle = syzygy_graded_dimensions(FieldFq(p), GaussPoly(ring.F), monomial_gens(a, b, c), ring.order(), 200);
          if (series != oracle) {
            ok = false;
            d << " " << ring.selector() << " p=" << p << " (" << a << "," << b << "," << c << ") differs;";
          }
          ++n_checked;
        }
      }
    }
    d << " recursion = oracle to degree 200 on " << n_checked << " (ring, triple, p) samples";
    return ok;
  });

  criterion(9, [&](std::ostringstream& d) {
    const HypersurfaceSpec h = HypersurfaceSpec::from_ring(e8);
    const RationalSeries hr = ring_series(h);
    bool ok = true;
    int n_checked = 0;
    for (std::uint32_t p = 7; p <= 97; ++p) {
      if (!is_prime(p)) continue;
      const long r = p % 30;
      const bool m1 = r == 1 || r == 11 || r == 19 || r == 29;
      const int want_index = m1 ? 1 : 8;
      const long want_shift = m1 ? 31 * (static_cast<long>(p) - 1) / 2 : 31 * (static_cast<long>(p) - 1) / 2 - 3;
      const long pl = static_cast<long>(p);
      const Classification c = classify(syzygy_series({h, pl, pl, pl}, p), hr, catalog_series(e8, p));
      const bool good = c.kind == Classification::Kind::Indecomposable && c.index == want_index && c.shift == want_shift;
      if (!good) d << " p=" << p << " got " << c.str() << ";";
      ok = ok && good;
      ++n_checked;
    }
    d << " E8 Frobenius classes M_1 / M_8 with the predicted twists for " << n_checked << " primes in [7, 97]";
    return ok;
  });

  criterion(10, [&](std::ostringstream& d) {
    const MatFac mf = example_e8_size4();
    const std::vector<int> w{15, 10, 6};
    const MfVerdict v = verify(mf);
    const int rank = coker_rank(mf);
    const auto k = kernel_vector(select_columns(mf.psi, {2, 3, 4}), mf.F, w, 10007);
    const std::vector<ZPoly> want{ZPoly::parse("Z"), ZPoly::parse("-Y"), ZPoly::parse("X")};
    std::vector<ZPoly> neg;
    for (const auto& f : want) neg.push_back(-f);
    const bool kernel_ok = k == want || k == neg;
    int columns_ok = 0;
    for (int drop = 1; drop <= 4; ++drop) {
      std::vector<int> cols;
      for (int c = 1; c <= 4; ++c)
        if (c != drop) cols.push_back(c);
      columns_ok += column_choice_check(select_columns(mf.psi, cols), mf.F, w, 10007) ? 1 : 0;
    }
    d << " valid " << v.valid << ", reduced " << v.reduced << ", coker rank " << rank << ", kernel of psi^{2,3,4} = ("
      << k[0].str() << ", " << k[1].str() << ", " << k[2].str() << "), column choices passing " << columns_ok << "/4";
    return v.valid && v.reduced && rank == 2 && kernel_ok && columns_ok == 4;
  });

  criterion(11, [&](std::ostringstream& d) {
    // delta / tau homogeneity under p-scaling.
    bool homog = true;
    int homog_cases = 0;
    const long curves[3][4] = {{3, 5, 10, 6}, {2, 3, 3, 2}, {3, 4, 4, 3}};
    for (long p : {3L, 5L, 7L, 61L}) {
      gen::Rng rng(0xacce11 + static_cast<std::uint64_t>(p));
      const auto up = static_cast<std::uint32_t>(p);
      for (int trial = 0; trial < 500; ++trial) {
        const RatTriple t{rng.rat(100, 12), rng.rat(100, 12), rng.rat(100, 12)};
        const long* c = curves[trial % 3];
        const TauQuery q{up, c[2], c[3], c[0], c[1], t};
        TauQuery qp = q;
        qp.t = scaled(t, p);
        homog = homog && delta({up, scaled(t, p)}) == Rat(p) * delta({up, t}) && tau(qp) == Rat(p) * tau(q);
        ++homog_cases;
      }
    }
    // m + n = d1 + d2 + d3 on random rank-two splits.
    bool degree_sum = true;
    int splits = 0;
    gen::Rng rng(0xacce12);
    while (splits < 200) {
      const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11, 13}[static_cast<std::size_t>(rng.uniform(0, 4))];
      const WeightedOrder order = rng.coin() ? WeightedOrder({1, 1}) : WeightedOrder({2, 3});
      std::vector<PolyFp> gens;
      long total = 0;
      for (int k = 0; k < 3; ++k) {
        long dk = 0;
        while (monomials_of_degree(order, dk = rng.uniform(1, 12)).empty()) {
        }
        gens.push_back(random_form(rng, p, order, dk));
        total += dk;
      }
      if (!quotient_dimension(buchberger(gens, order))) continue;
      const auto [m, n] = split_degrees_rank2(gens, order);
      degree_sum = degree_sum && m <= n && m + n == total;
      ++splits;
    }
    // |HK(q)/q^2 - e_HK| <= 2/q^2 for p <= 50, e <= 3.
    std::vector<AdeRingSpec> rings{e6, e7, e8};
    for (int n = 1; n <= 4; ++n) rings.push_back(make_ring(Family::A, n));
    for (int n = 2; n <= 4; ++n) rings.push_back(make_ring(Family::D, n));
    int bound_cases = 0, bound_bad = 0, bound_bad_good_p = 0;
    std::string first_bad;
    for (const auto& ring : rings)
      for (std::uint32_t p = 2; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned e = 1; e <= 3; ++e) {
          const Rat g = hk_gamma(ring, p, e);
          ++bound_cases;
          if (g > Rat(2) || g < Rat(-2)) {
            ++bound_bad;
            if (ring.family == Family::A || ring.group_order % p != 0) ++bound_bad_good_p;
            if (first_bad.empty()) first_bad = ring.selector() + " p=" + std::to_string(p) + " e=" + std::to_string(e) + " gamma " + g.str();
          }
        }
      }
    d << " homogeneity " << (homog ? "holds" : "fails") << " on " << homog_cases << " cases; degree sum "
      << (degree_sum ? "holds" : "fails") << " on " << splits << " splits; HK bound violated on " << bound_bad << "/"
      << bound_cases << " points (" << bound_bad_good_p << " with p not dividing |G|)";
    if (!first_bad.empty()) d << ", first: " << first_bad;
    return homog && degree_sum && bound_bad == 0;
  });

  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

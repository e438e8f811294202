#include "adehk/series_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "adehk/error.hpp"
#include "adehk/han_delta.hpp"

namespace adehk {

HypersurfaceSpec HypersurfaceSpec::from_ring(const AdeRingSpec& ring) {
  HypersurfaceSpec h;
  h.alpha = ring.weights[0];
  h.beta = ring.weights[1];
  h.gamma = ring.weights[2];
  switch (ring.family) {
    case Family::A:
      h.d = ring.n + 1;
      h.shape = Shape::Monomial;
      h.a = h.b = 1;
      break;
    case Family::D:
      h.d = 2;
      h.shape = Shape::YTimesBinomial;
      h.a = ring.n;
      h.b = 2;
      break;
    case Family::E6:
      h.d = 2;
      h.shape = Shape::Binomial;
      h.a = 3;
      h.b = 4;
      break;
    case Family::E7:
      h.d = 2;
      h.shape = Shape::YTimesBinomial;
      h.a = 2;
      h.b = 3;
      break;
    case Family::E8:
      h.d = 2;
      h.shape = Shape::Binomial;
      h.a = 3;
      h.b = 5;
      break;
  }
  return h;
}

long HypersurfaceSpec::deg_g() const {
  switch (shape) {
    case Shape::Binomial: return degF();
    case Shape::YTimesBinomial: return degF() - beta;
    case Shape::Monomial: return 0;
  }
  return 0;
}

long factored_degree(const HypersurfaceSpec& ring, const FactoredGen& f) {
  return f.y * ring.beta + f.z * ring.gamma + f.k * ring.deg_g();
}

Rewritten rewrite_common_factor(const HypersurfaceSpec& ring, std::vector<FactoredGen> gens) {
  Rewritten out;
  if (gens.empty()) return out;
  auto common = [](const std::vector<FactoredGen>& gs, std::size_t count) {
    FactoredGen c = gs.front();
    for (std::size_t i = 1; i < count; ++i) {
      c.y = std::min(c.y, gs[i].y);
      c.z = std::min(c.z, gs[i].z);
      c.k = std::min(c.k, gs[i].k);
    }
    return c;
  };
  auto strip = [&](const FactoredGen& f, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      gens[i].y -= f.y;
      gens[i].z -= f.z;
      gens[i].k -= f.k;
    }
    out.shift += factored_degree(ring, f);
  };

  const FactoredGen all = common(gens, gens.size());
  if (!all.is_unit()) strip(all, gens.size());

  if (gens.size() >= 2) {
    const FactoredGen f = common(gens, gens.size() - 1);
    if (!f.is_unit()) {
      const FactoredGen& last = gens.back();
      const bool coprime = !(f.y > 0 && last.y > 0) && !(f.z > 0 && last.z > 0) && !(f.k > 0 && last.k > 0);
      if (!coprime) throw std::invalid_argument("rewrite_common_factor: common factor is not coprime to the last generator");
      strip(f, gens.size() - 1);
    }
  }
  out.gens = std::move(gens);
  return out;
}

namespace {

std::pair<long, long> ordered(long m, long n) { return m <= n ? std::pair{m, n} : std::pair{n, m}; }

bool mono_divides(const FactoredGen& a, const FactoredGen& b) { return a.y <= b.y && a.z <= b.z; }

FactoredGen mono_lcm(const FactoredGen& a, const FactoredGen& b) {
  return {std::max(a.y, b.y), std::max(a.z, b.z), 0};
}

std::pair<long, long> monomial_split(const HypersurfaceSpec& ring, std::vector<FactoredGen> g) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j || !mono_divides(g[i], g[j])) continue;
      const std::size_t k = 3 - i - j;
      return ordered(factored_degree(ring, g[j]), factored_degree(ring, mono_lcm(g[i], g[k])));
    }
  std::sort(g.begin(), g.end(), [](const FactoredGen& a, const FactoredGen& b) { return a.y < b.y; });
  return ordered(factored_degree(ring, mono_lcm(g[0], g[1])), factored_degree(ring, mono_lcm(g[1], g[2])));
}

}  // namespace

std::pair<long, long> base_split(const HypersurfaceSpec& ring, std::uint32_t p, long q_pow, long b, long c) {
  if (q_pow < 0 || b < 0 || c < 0) throw std::invalid_argument("base_split: negative exponent");
  FactoredGen first;
  switch (ring.shape) {
    case HypersurfaceSpec::Shape::Binomial: first = {0, 0, q_pow}; break;
    case HypersurfaceSpec::Shape::YTimesBinomial: first = {q_pow, 0, q_pow}; break;
    case HypersurfaceSpec::Shape::Monomial: first = {q_pow * ring.a, q_pow * ring.b, 0}; break;
  }
  Rewritten rw = rewrite_common_factor(ring, {first, {b, 0, 0}, {0, c, 0}});
  const auto& g = rw.gens;
  const long s = rw.shift;

  for (std::size_t i = 0; i < 3; ++i) {
    if (!g[i].is_unit()) continue;
    const long d1 = factored_degree(ring, g[(i + 1) % 3]);
    const long d2 = factored_degree(ring, g[(i + 2) % 3]);
    auto [m, n] = ordered(d1, d2);
    return {m + s, n + s};
  }
  if (g[0].k == 0) {
    auto [m, n] = monomial_split(ring, g);
    return {m + s, n + s};
  }
  if (g[0].y != 0 || g[0].z != 0 || g[1].z != 0 || g[1].k != 0 || g[2].y != 0 || g[2].k != 0)
    throw InconsistencyError("base_split: generators are not of binomial form (g^k, Y^b, Z^c)");

  const long k = g[0].k, bb = g[1].y, cc = g[2].z;
  TauQuery tq;
  tq.p = p;
  tq.alpha = ring.beta;
  tq.beta = ring.gamma;
  tq.a = ring.a;
  tq.b = ring.b;
  tq.t = {Rat(k), Rat(bb), Rat(cc)};
  const Rat t = tau(tq);
  if (!t.is_integer()) throw InconsistencyError("base_split: tau is not an integer: " + t.str());
  const long gap = to_int64(t.num());
  const long sum = k * ring.deg_g() + bb * ring.beta + cc * ring.gamma;
  if ((sum - gap) % 2 != 0)
    throw InconsistencyError("base_split: parity failure (sum " + std::to_string(sum) + ", gap " + std::to_string(gap) + ")");
  const long m = (sum - gap) / 2;
  return {m + s, m + gap + s};
}

RationalSeries lift_to_hypersurface(const RationalSeries& h_p, const HypersurfaceSpec& ring) {
  return h_p.times(IntPoly::geometric(ring.alpha, ring.d));
}

RationalSeries ring_series(const HypersurfaceSpec& ring) {
  return RationalSeries(IntPoly::one_minus(ring.degF()), {ring.alpha, ring.beta, ring.gamma});
}

RationalSeries recursion_step(long a, const HypersurfaceSpec& ring, const RationalSeries& h_low,
                              const RationalSeries& h_high) {
  const long r = a % ring.d;
  if (r == 0) return h_low;
  const long ar = ring.alpha * r, ad = ring.alpha * ring.d;
  IntPoly c_low = IntPoly::monomial(ar) - IntPoly::monomial(ad);
  IntPoly c_high = IntPoly::one_minus(ar);
  return series_divide_cyclotomic(series_add(h_low.times(c_low), h_high.times(c_high)), ad);
}

namespace {

RationalSeries level_series(const HypersurfaceSpec& ring, std::uint32_t p, long q_pow, long b, long c) {
  auto [m, n] = base_split(ring, p, q_pow, b, c);
  IntPoly num = IntPoly::monomial(m) + IntPoly::monomial(n);
  return lift_to_hypersurface(RationalSeries(num, {ring.beta, ring.gamma}), ring);
}

}  // namespace

RationalSeries syzygy_series(const SyzygySpec& spec, std::uint32_t p) {
  const auto& ring = spec.ring;
  if (spec.a < 0 || spec.b < 1 || spec.c < 1) throw std::invalid_argument("syzygy_series: need a >= 0, b, c >= 1");
  const long q = spec.a / ring.d, r = spec.a % ring.d;
  RationalSeries low = level_series(ring, p, q, spec.b, spec.c);
  if (r == 0) return low;
  RationalSeries high = level_series(ring, p, q + 1, spec.b, spec.c);
  RationalSeries h = recursion_step(spec.a, ring, low, high);
  auto out = reexpress_over(h, {ring.beta, ring.gamma});
  if (!out)
    throw InconsistencyError("syzygy_series: division by (1 - t^" + std::to_string(ring.degF()) + ") did not cancel: " + h.str());
  return *out;
}

std::optional<std::pair<long, long>> free_split_shifts(const RationalSeries& h, const RationalSeries& h_ring) {
  if (h.is_zero()) return std::nullopt;
  const auto lcd = multiset_union(h.denominator_weights(), h_ring.denominator_weights());
  const IntPoly nh = h.numerator_over(lcd);
  const IntPoly nr = h_ring.numerator_over(lcd);
  // nh = (t^m + t^n) nr; peel the lowest term twice.
  const long m = nh.low_degree() - nr.low_degree();
  if (nh.coeff(nh.low_degree()) % nr.coeff(nr.low_degree()) != 0) return std::nullopt;
  IntPoly rest = nh - nr.shifted(m);
  if (rest.is_zero()) return std::nullopt;
  const long n = rest.low_degree() - nr.low_degree();
  if (rest == nr.shifted(n)) return ordered(m, n);
  return std::nullopt;
}

std::string Classification::str() const {
  switch (kind) {
    case Kind::Indecomposable: {
      std::string s = "M_" + std::to_string(index) + " shift " + std::to_string(shift);
      if (!also_matches.empty()) {
        s += " (same series as";
        for (int j : also_matches) s += " M_" + std::to_string(j);
        s += ")";
      }
      return s;
    }
    case Kind::FreeSplit:
      return "free R(-" + std::to_string(m) + ") + R(-" + std::to_string(n) + ")";
    case Kind::Unknown:
      return "no single catalog match";
  }
  return "";
}

Classification classify(const RationalSeries& h, const RationalSeries& h_ring, const std::vector<CatalogSeries>& catalog) {
  Classification out;
  if (auto fs = free_split_shifts(h, h_ring)) {
    out.kind = Classification::Kind::FreeSplit;
    out.m = fs->first;
    out.n = fs->second;
    return out;
  }
  std::vector<std::pair<int, long>> hits;
  for (const auto& e : catalog)
    if (auto l = series_equal_up_to_shift(h, e.series)) hits.emplace_back(e.index, *l);
  if (hits.empty()) return out;
  const auto& first = *std::find_if(catalog.begin(), catalog.end(), [&](const CatalogSeries& e) { return e.index == hits[0].first; });
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (std::find(first.conjugates.begin(), first.conjugates.end(), hits[i].first) == first.conjugates.end())
      throw InconsistencyError("classify: ambiguous match between M_" + std::to_string(hits[0].first) + " and M_" +
                               std::to_string(hits[i].first));
    out.also_matches.push_back(hits[i].first);
  }
  out.kind = Classification::Kind::Indecomposable;
  out.index = hits[0].first;
  out.shift = hits[0].second;
  return out;
}

bool matches_sum_of_rank_one(const RationalSeries& h, const RationalSeries& h_ring,
                             const std::vector<CatalogSeries>& catalog) {
  std::vector<RationalSeries> ones{h_ring};
  for (const auto& e : catalog)
    if (e.rank == 1) ones.push_back(e.series);
  if (h.is_zero()) return false;
  std::vector<long> lcd = h.denominator_weights();
  for (const auto& s : ones) lcd = multiset_union(lcd, s.denominator_weights());
  const IntPoly nh = h.numerator_over(lcd);
  std::vector<IntPoly> nums;
  for (const auto& s : ones) nums.push_back(s.numerator_over(lcd));
  for (std::size_t i = 0; i < nums.size(); ++i) {
    // The lowest term of H comes from the first summand after reordering.
    const long l1 = nh.low_degree() - nums[i].low_degree();
    const IntPoly rest = nh - nums[i].shifted(l1);
    if (rest.is_zero()) continue;
    for (std::size_t j = 0; j < nums.size(); ++j) {
      const long l2 = rest.low_degree() - nums[j].low_degree();
      if (rest == nums[j].shifted(l2)) return true;
    }
  }
  return false;
}

}  // namespace adehk

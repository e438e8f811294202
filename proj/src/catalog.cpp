#include "adehk/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "adehk/error.hpp"
#include "adehk/field.hpp"
#include "adehk/syzygy_oracle.hpp"

namespace adehk {

std::vector<GaussPoly> McmModuleSpec::generator_polys() const {
  std::vector<GaussPoly> out;
  for (const auto& g : generators) out.push_back(GaussPoly::parse(g));
  return out;
}

bool McmModuleSpec::uses_i() const {
  return std::any_of(generators.begin(), generators.end(), [](const std::string& g) { return g.find('i') != std::string::npos; });
}

namespace {

McmModuleSpec entry(int index, std::vector<std::string> gens, int dual, std::optional<int> det = std::nullopt,
                    std::optional<std::string> iso = std::nullopt, std::vector<int> conj = {}) {
  McmModuleSpec m;
  m.index = index;
  m.rank = static_cast<int>(gens.size()) - 1;
  m.generators = std::move(gens);
  m.dual_index = dual;
  m.determinant_index = det;
  m.ideal_iso = std::move(iso);
  m.conjugates = std::move(conj);
  return m;
}

std::string ypow(int k) { return k == 1 ? "Y" : "Y^" + std::to_string(k); }
std::string xpow(int k) { return k == 1 ? "X" : "X^" + std::to_string(k); }

std::vector<McmModuleSpec> catalog_a(int n) {
  std::vector<McmModuleSpec> out;
  for (int m = 1; m <= n; ++m)
    out.push_back(entry(m, {xpow(m), "Z"}, n + 1 - m, std::nullopt, "(" + xpow(m) + ", Y)",
                        2 * m == n + 1 ? std::vector<int>{} : std::vector<int>{n + 1 - m}));
  return out;
}

std::vector<McmModuleSpec> catalog_d(int n) {
  std::vector<McmModuleSpec> out;
  out.push_back(entry(1, {"X", "Y"}, 1, std::nullopt, "(X, Y)"));
  for (int m = 2; m <= n; ++m) {
    if (m % 2 == 0) out.push_back(entry(m, {"X", ypow(m / 2), "Z"}, m));
    else out.push_back(entry(m, {"X", ypow((m + 1) / 2), "YZ"}, m));
  }
  if (n % 2 == 0) {
    const std::string y = ypow(n / 2);
    out.push_back(entry(n + 1, {"X", "Z-i" + y}, n + 1, 1, "(X, Z-i" + y + ")", {n + 2}));
    out.push_back(entry(n + 2, {"X", "Z+i" + y}, n + 2, 1, "(X, Z+i" + y + ")", {n + 1}));
  } else {
    const std::string y = ypow((n + 1) / 2);
    out.push_back(entry(n + 1, {"Z", "X+i" + y}, n + 2, 1, "(Z, X-i" + y + ")", {n + 2}));
    out.push_back(entry(n + 2, {"Z", "X-i" + y}, n + 1, 1, "(Z, X+i" + y + ")", {n + 1}));
  }
  if (n == 2) {
    // D_4: the three rank-one modules are permuted by triality.
    out[0].conjugates = {3, 4};
    out[2].conjugates = {1, 4};
    out[3].conjugates = {1, 3};
  }
  return out;
}

std::vector<McmModuleSpec> catalog_e6() {
  return {
      entry(1, {"X", "Y", "Z"}, 1),
      entry(2, {"X", "Y^2", "YZ", "Z^2"}, 2),
      entry(3, {"iX+Z^2", "Y^2", "YZ"}, 4, 5, std::nullopt, {4}),
      entry(4, {"-iX+Z^2", "Y^2", "YZ"}, 3, 6, std::nullopt, {3}),
      entry(5, {"-iX+Z^2", "Y"}, 6, std::nullopt, "(iX+Z^2, Y)", {6}),
      entry(6, {"iX+Z^2", "Y"}, 5, std::nullopt, "(-iX+Z^2, Y)", {5}),
  };
}

std::vector<McmModuleSpec> catalog_e7() {
  return {
      entry(1, {"X", "Y", "Z"}, 1),
      entry(2, {"X", "Y^2", "YZ", "Z^2"}, 2),
      entry(3, {"XY", "XZ", "Y^2", "YZ^2", "Z^3"}, 3),
      entry(4, {"X", "Y^2", "YZ"}, 4, 7),
      entry(5, {"XY", "XZ", "Y^2", "YZ^2"}, 5, 7),
      entry(6, {"X", "Y", "Z^2"}, 6),
      entry(7, {"X", "Y"}, 7, 7, "(X, Y)"),
  };
}

std::vector<McmModuleSpec> catalog_e8() {
  return {
      entry(1, {"X", "Y", "Z"}, 1),
      entry(2, {"X", "Y^2", "YZ", "Z^2"}, 2),
      entry(3, {"XY", "XZ", "Y^2", "YZ^2", "Z^3"}, 3),
      entry(4, {"XY", "XZ^2", "Y^3", "Y^2Z", "YZ^3", "Z^4"}, 4),
      entry(5, {"XY^2", "XYZ^2", "XZ^4", "Y^4", "Y^3Z", "Y^2Z^3", "Z^5"}, 5),
      entry(6, {"X", "Y^2", "YZ", "Z^3"}, 6),
      entry(7, {"XY", "XZ", "Y^2", "YZ^2", "Z^4"}, 7),
      entry(8, {"X", "Y", "Z^2"}, 8),
  };
}

}  // namespace

std::vector<McmModuleSpec> catalog(const AdeRingSpec& ring) {
  switch (ring.family) {
    case Family::A: return catalog_a(ring.n);
    case Family::D: return catalog_d(ring.n);
    case Family::E6: return catalog_e6();
    case Family::E7: return catalog_e7();
    case Family::E8: return catalog_e8();
  }
  return {};
}

RationalSeries fit_mcm_series(const AdeRingSpec& ring, const std::vector<GaussPoly>& gens, int rank, std::uint32_t p) {
  const HypersurfaceSpec hs = HypersurfaceSpec::from_ring(ring);
  const long target = static_cast<long>(rank) * hs.d;
  const FieldFq field(p);
  const WeightedOrder order = ring.order();
  long bound = 0;
  for (const auto& g : gens) {
    auto d = g.homogeneous_degree(ring.weights);
    if (!d) throw std::invalid_argument("fit_mcm_series: generator " + g.str() + " is not homogeneous");
    bound += *d;
  }
  bound += ring.degF;
  for (int attempt = 0; attempt < 8; ++attempt, bound *= 2) {
    auto dims = syzygy_graded_dimensions(field, GaussPoly(ring.F), gens, order, bound);
    IntPoly h;
    for (long m = 0; m <= bound; ++m) h.add_term(m, dims[static_cast<std::size_t>(m)]);
    IntPoly num = h.times_one_minus(hs.beta).times_one_minus(hs.gamma);
    IntPoly kept;
    std::int64_t sum = 0;
    for (auto [e, c] : num.terms()) {
      if (e > bound) continue;
      if (c < 0) throw InconsistencyError("fit_mcm_series: negative numerator coefficient; module is not free over k[Y,Z]");
      kept.add_term(e, c);
      sum += c;
    }
    if (sum > target) throw InconsistencyError("fit_mcm_series: numerator exceeds rank " + std::to_string(target));
    if (sum == target) return RationalSeries(kept, {hs.beta, hs.gamma});
  }
  throw InconsistencyError("fit_mcm_series: numerator did not close up to degree " + std::to_string(bound));
}

const std::vector<CatalogSeries>& catalog_series(const AdeRingSpec& ring, std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::uint32_t>, std::vector<CatalogSeries>> cache;
  const auto key = std::make_pair(ring.selector(), p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<CatalogSeries> out;
  for (const auto& m : catalog(ring)) {
    CatalogSeries c;
    c.index = m.index;
    c.rank = m.rank;
    c.series = fit_mcm_series(ring, m.generator_polys(), m.rank, p);
    c.conjugates = m.conjugates;
    out.push_back(std::move(c));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, std::move(out)).first->second;
}

std::optional<PullbackTarget> pullback_target_for(const AdeRingSpec& source, int k) {
  if (k == 1 && source.family != Family::A) return PullbackTarget::A1;
  if (source.family != Family::D) return std::nullopt;
  if (k == 2 * source.n - 1) return PullbackTarget::A2nm1;
  if (k == source.n - 1) return PullbackTarget::Anm1;
  return std::nullopt;
}

PullbackTable pullback_table(const AdeRingSpec& source, PullbackTarget target) {
  PullbackTable t;
  t.source = source;
  t.target = target;
  t.rows[0] = {0};
  using V = std::vector<int>;
  const int n = source.n;
  switch (source.family) {
    case Family::A: throw std::invalid_argument("pullback tables start from D or E rings");
    case Family::E6:
    case Family::E7:
    case Family::E8:
      if (target != PullbackTarget::A1) throw std::invalid_argument("E rings pull back to A_1 only");
      break;
    case Family::D: break;
  }
  if (source.family == Family::E6) {
    t.rows[1] = V{1, 1};
    t.rows[2] = V{0, 0, 0};
    t.rows[3] = V{1, 1};
    t.rows[4] = V{1, 1};
    t.rows[5] = V{0};
    t.rows[6] = V{0};
    return t;
  }
  if (source.family == Family::E7) {
    t.rows[1] = V{1, 1};
    t.rows[2] = V(3, 0);
    t.rows[3] = V(4, 1);
    t.rows[4] = V(2, 0);
    t.rows[5] = V(3, 0);
    t.rows[6] = V(2, 1);
    t.rows[7] = V{0};
    return t;
  }
  if (source.family == Family::E8) {
    t.rows[1] = V(2, 1);
    t.rows[2] = V(3, 0);
    t.rows[3] = V(4, 1);
    t.rows[4] = V(5, 0);
    t.rows[5] = V(6, 1);
    t.rows[6] = V(3, 0);
    t.rows[7] = V(4, 0);
    t.rows[8] = V(2, 1);
    return t;
  }
  t.rows[1] = {0};
  switch (target) {
    case PullbackTarget::A2nm1:
      t.target_n = 2 * n - 1;
      for (int j = 2; j <= n; ++j) {
        if (j % 2 == 0) {
          const int m = j / 2;
          t.rows[j] = {2 * m - 1, 2 * (n - m) + 1};
        } else {
          const int m = (j + 1) / 2;
          t.rows[j] = {2 * m - 2, 2 * (n - m) + 2};
        }
      }
      t.rows[n + 1] = {n};
      t.rows[n + 2] = {n};
      break;
    case PullbackTarget::A1:
      t.target_n = 1;
      for (int j = 2; j <= n; ++j) t.rows[j] = j % 2 == 0 ? V{1, 1} : V{0, 0};
      if (n % 2 == 0) {
        t.rows[n + 1] = {0, 0};
        t.rows[n + 2] = {0, 0};
      } else {
        t.rows[n + 1] = {1};
        t.rows[n + 2] = {1};
      }
      break;
    case PullbackTarget::Anm1: {
      if (n < 2) throw std::invalid_argument("A_{n-1} needs n >= 2");
      t.target_n = n - 1;
      auto norm = [n](int r) { return r == 0 || r == n ? 0 : r; };
      for (int j = 2; j <= n; ++j) {
        const int r = j - 1;
        t.rows[j] = {norm(r), norm(n - r)};
      }
      t.rows[n + 1] = {0};
      t.rows[n + 2] = {0};
      break;
    }
  }
  return t;
}

const std::vector<int>& pullback(const PullbackTable& table, int index) {
  auto it = table.rows.find(index);
  if (it == table.rows.end())
    throw std::out_of_range("pullback: no row M_" + std::to_string(index) + " for " + table.source.dynkin_name() + " -> " +
                            table.target_name());
  return it->second;
}

std::vector<int> rank_consistency_violations(const PullbackTable& table) {
  const std::size_t mult = pullback(table, 0).size();
  std::vector<int> out;
  for (const auto& m : catalog(table.source)) {
    auto it = table.rows.find(m.index);
    if (it == table.rows.end()) continue;
    if (it->second.size() != static_cast<std::size_t>(m.rank) * mult) out.push_back(m.index);
  }
  return out;
}

std::string FrobeniusClass::str() const {
  auto rep = [&] {
    std::string s = "Syz(";
    for (std::size_t k = 0; k < representative.size(); ++k) s += (k ? ", " : "") + representative[k];
    return s + ")";
  };
  switch (kind) {
    case Kind::Indecomposable: return "M_" + std::to_string(index) + "(-" + std::to_string(twist) + ")";
    case Kind::FreeSplit: return "R(-" + std::to_string(m) + ") + R(-" + std::to_string(n) + ")";
    case Kind::Unindexed: return rep() + "(-" + std::to_string(twist) + ")";
    case Kind::DelegateA: return "type A: closed formula";
  }
  return "";
}

namespace {

long checked_pow(std::uint32_t p, unsigned e) {
  long q = 1;
  for (unsigned k = 0; k < e; ++k)
    if (__builtin_mul_overflow(q, static_cast<long>(p), &q)) throw std::overflow_error("p^e does not fit in 64 bits");
  return q;
}

long degree_sum(const AdeRingSpec& ring, const std::vector<std::string>& gens) {
  long s = 0;
  for (const auto& g : gens) s += *GaussPoly::parse(g).homogeneous_degree(ring.weights);
  return s;
}

FrobeniusClass indexed(const AdeRingSpec& ring, long q, int index) {
  FrobeniusClass c;
  c.kind = FrobeniusClass::Kind::Indecomposable;
  c.index = index;
  for (const auto& m : catalog(ring))
    if (m.index == index) c.representative = m.generators;
  c.twist = (q * ring.weight_sum() - degree_sum(ring, c.representative)) / 2;
  return c;
}

FrobeniusClass free_split(long m, long n) {
  FrobeniusClass c;
  c.kind = FrobeniusClass::Kind::FreeSplit;
  c.m = m;
  c.n = n;
  return c;
}

bool residue_in(long q, long mod, std::initializer_list<long> set) {
  const long r = q % mod;
  return std::any_of(set.begin(), set.end(), [&](long s) { return r == s || r == mod - s; });
}

}  // namespace

FrobeniusClass frobenius_class(const AdeRingSpec& ring, std::uint32_t p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("frobenius_class: p = " + std::to_string(p) + " is not prime");
  const long q = checked_pow(p, e);
  const bool positive = e >= 1;
  switch (ring.family) {
    case Family::A: return FrobeniusClass{};
    case Family::E8:
      if (positive && (p == 2 || p == 3 || p == 5)) return free_split(15 * q, 16 * q);
      return indexed(ring, q, residue_in(q, 30, {7, 13}) ? 8 : 1);
    case Family::E6:
      if (positive && (p == 2 || p == 3)) return free_split(6 * q, 7 * q);
      return indexed(ring, q, 1);
    case Family::E7:
      if (positive && (p == 2 || p == 3)) return free_split(9 * q, 10 * q);
      return indexed(ring, q, residue_in(q, 24, {1, 7}) ? 1 : 6);
    case Family::D: {
      const long n = ring.n;
      if (positive && p == 2) return free_split((n + 1) * q, (n + 2) * q);
      const long r = q % (2 * n);
      if (r <= n - 1) return indexed(ring, q, static_cast<int>(r + 1));
      if (r >= n + 1) return indexed(ring, q, static_cast<int>(2 * n - r + 1));
      FrobeniusClass c;
      c.kind = FrobeniusClass::Kind::Unindexed;
      c.representative = {"X", ypow(static_cast<int>((r + 1) / 2)), "Z"};
      c.twist = (q * ring.weight_sum() - degree_sum(ring, c.representative)) / 2;
      return c;
    }
  }
  return FrobeniusClass{};
}

}  // namespace adehk

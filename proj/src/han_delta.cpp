#include "adehk/han_delta.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "adehk/field.hpp"

namespace adehk {

LatticePoint odd_lattice_distance(const RatTriple& v) {
  std::array<std::array<BigInt, 4>, 3> cand;
  std::array<int, 3> count{};
  for (int i = 0; i < 3; ++i) {
    if (v[i].sign() < 0) throw std::invalid_argument("odd_lattice_distance: negative coordinate");
    const BigInt f = v[i].floor();
    for (int k = -1; k <= 2; ++k) {
      BigInt c = f + k;
      if (c >= 0) cand[i][count[i]++] = c;
    }
  }
  LatticePoint best;
  bool found = false;
  for (int a = 0; a < count[0]; ++a)
    for (int b = 0; b < count[1]; ++b)
      for (int c = 0; c < count[2]; ++c) {
        const BigInt sum = cand[0][a] + cand[1][b] + cand[2][c];
        if (mpz_even_p(sum.get_mpz_t())) continue;
        IntTriple u{cand[0][a], cand[1][b], cand[2][c]};
        Rat d = (v[0] - Rat(u[0])).abs() + (v[1] - Rat(u[1])).abs() + (v[2] - Rat(u[2])).abs();
        // Candidates are visited in lexicographic order, so strict < keeps the smallest u.
        if (!found || d < best.dist) {
          best = {u, d};
          found = true;
        }
      }
  return best;
}

namespace {

Rat mod2(const Rat& x) {
  const BigInt k = (x / Rat(2)).floor();
  return x - Rat(k * 2);
}

}  // namespace

DeltaResult delta_detailed(const DeltaQuery& q) {
  if (!is_prime(q.p)) throw std::invalid_argument("delta: " + std::to_string(q.p) + " is not prime");
  const RatTriple& t = q.t;
  for (const auto& x : t)
    if (x.sign() < 0) throw std::invalid_argument("delta: entries must be non-negative");

  DeltaResult r;
  for (int i = 0; i < 3; ++i) {
    const Rat excess = t[i] - t[(i + 1) % 3] - t[(i + 2) % 3];
    if (excess.sign() >= 0) {
      r.value = excess;
      r.branch = DeltaResult::Branch::Excess;
      return r;
    }
  }

  // Below s_min every p^s t lies within the open unit simplex corner, at distance > 1 from L_odd.
  const Rat total = t[0] + t[1] + t[2] + Rat(1);
  long k = 0;
  Rat pk(1);
  while (pk < total) {
    pk *= Rat(static_cast<long>(q.p));
    ++k;
  }
  r.s_min = -k;

  std::set<std::array<std::string, 3>> seen;
  for (long s = r.s_min;; ++s) {
    const Rat scale = rpow(Rat(static_cast<long>(q.p)), s);
    const RatTriple v{t[0] * scale, t[1] * scale, t[2] * scale};
    LatticePoint lp = odd_lattice_distance(v);
    if (lp.dist < Rat(1)) {
      r.value = (Rat(1) - lp.dist) / scale;
      r.branch = DeltaResult::Branch::Lattice;
      r.s = s;
      r.u = lp.u;
      r.dist = lp.dist;
      r.s_min_binds = (s == r.s_min);
      return r;
    }
    // Once every nonzero coordinate is >= 2 the test depends only on p^s t mod 2,
    // which evolves by multiplication by p on a finite set.
    bool large = true;
    for (const auto& x : v)
      if (!x.is_zero() && x < Rat(2)) large = false;
    if (large) {
      std::array<std::string, 3> state{mod2(v[0]).str(), mod2(v[1]).str(), mod2(v[2]).str()};
      if (!seen.insert(state).second) break;
    }
  }
  r.value = Rat(0);
  r.branch = DeltaResult::Branch::Zero;
  return r;
}

Rat delta(const DeltaQuery& q) { return delta_detailed(q).value; }

Rat tau(const TauQuery& q) {
  if (q.alpha <= 0 || q.beta <= 0 || q.a <= 0 || q.b <= 0) throw std::invalid_argument("tau: parameters must be positive");
  if (q.a * q.alpha != q.b * q.beta)
    throw std::invalid_argument("tau: need a*alpha == b*beta, got " + std::to_string(q.a * q.alpha) + " vs " +
                                std::to_string(q.b * q.beta));
  DeltaQuery dq{q.p, {q.t[0], q.t[1] / Rat(q.a), q.t[2] / Rat(q.b)}};
  return Rat(q.a * q.alpha) * delta(dq);
}

}  // namespace adehk

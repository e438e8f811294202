#include "adehk/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "adehk/field.hpp"

namespace adehk {

WeightedOrder::WeightedOrder(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.empty() || weights_.size() > 3) throw std::invalid_argument("WeightedOrder: 1 to 3 variables");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("WeightedOrder: weights must be positive");
}

std::uint64_t WeightedOrder::key(Mono m) const {
  const long d = degree(m);
  if (d >= (1L << 22)) throw std::overflow_error("weighted degree too large for the order key");
  std::uint64_t k = static_cast<std::uint64_t>(d) << 42;
  const int n = nvars();
  if (n >= 2) k |= (mono::kFieldMask - mono::exp(m, n - 1)) << 21;
  if (n >= 3) k |= (mono::kFieldMask - mono::exp(m, n - 2));
  return k;
}

namespace {

struct Term {
  std::uint64_t key;
  Mono m;
  std::uint32_t c;
};

// Terms sorted by key descending; monic once inserted into the basis.
using IPoly = std::vector<Term>;

IPoly to_internal(const PolyFp& f, const WeightedOrder& ord) {
  IPoly r;
  r.reserve(f.terms().size());
  for (auto [m, c] : f.terms()) r.push_back({ord.key(m), m, c});
  std::sort(r.begin(), r.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
  return r;
}

PolyFp to_external(const IPoly& f, std::uint32_t p, int nvars) {
  PolyFp r(p, nvars);
  for (const auto& t : f) r.add_term(t.m, t.c);
  return r;
}

void make_monic(IPoly& f, std::uint32_t p) {
  if (f.empty() || f.front().c == 1) return;
  const std::uint32_t inv = mod_inv(f.front().c, p);
  for (auto& t : f) t.c = mod_mul(t.c, inv, p);
}

class Reducer {
 public:
  Reducer(std::uint32_t p, const WeightedOrder& ord) : p_(p), ord_(ord) {}

  void add(const IPoly& f, std::size_t start, std::uint32_t scale, Mono shift) {
    for (std::size_t i = start; i < f.size(); ++i) {
      const Mono m = mono::mul(f[i].m, shift);
      auto [it, inserted] = acc_.try_emplace(m, 0u);
      if (inserted) heap_.push({ord_.key(m), m});
      it->second = mod_add(it->second, mod_mul(f[i].c, scale, p_), p_);
    }
  }

  // Fully reduces the accumulated polynomial by the polys in `basis` selected by `active`.
  IPoly reduce(const std::vector<IPoly>& basis, const std::vector<std::size_t>& active) {
    IPoly rem;
    while (!heap_.empty()) {
      auto [key, m] = heap_.top();
      heap_.pop();
      auto it = acc_.find(m);
      const std::uint32_t c = it->second;
      acc_.erase(it);
      if (c == 0) continue;
      const IPoly* red = nullptr;
      for (std::size_t idx : active) {
        if (mono::divides(basis[idx].front().m, m)) {
          red = &basis[idx];
          break;
        }
      }
      if (red) {
        add(*red, 1, mod_neg(c, p_), mono::quot(m, red->front().m));
      } else {
        rem.push_back({key, m, c});
      }
    }
    return rem;
  }

 private:
  std::uint32_t p_;
  const WeightedOrder& ord_;
  std::unordered_map<Mono, std::uint32_t> acc_;
  std::priority_queue<std::pair<std::uint64_t, Mono>> heap_;
};

struct Pair {
  std::uint64_t lcm_key;
  std::size_t i, j;
  Mono lcm;
  bool operator<(const Pair& o) const { return std::tie(lcm_key, i, j) < std::tie(o.lcm_key, o.i, o.j); }
};

class Engine {
 public:
  Engine(std::uint32_t p, const WeightedOrder& ord) : p_(p), ord_(ord) {}

  void insert(IPoly h) {
    make_monic(h, p_);
    const std::size_t hi = polys_.size();
    const Mono lh = h.front().m;
    polys_.push_back(std::move(h));

    // Gebauer-Moeller update.
    std::vector<std::size_t> cand(active_.begin(), active_.end());
    std::vector<Mono> lcms;
    for (std::size_t g : cand) lcms.push_back(mono::lcm(lh, lt(g)));
    std::vector<bool> keep(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (mono::gcd(lh, lt(cand[a])) == 0) {
        keep[a] = true;
        continue;
      }
      // Pairs still pending (b > a) or already kept (b < a) may dominate.
      bool dominated = false;
      for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
        if (b == a || (b < a && !keep[b])) continue;
        dominated = mono::divides(lcms[b], lcms[a]);
      }
      if (!dominated) keep[a] = true;
    }

    std::set<Pair> next;
    for (const Pair& pr : pairs_) {
      const bool drop = mono::divides(lh, pr.lcm) && mono::lcm(lt(pr.i), lh) != pr.lcm &&
                        mono::lcm(lh, lt(pr.j)) != pr.lcm;
      if (!drop) next.insert(pr);
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (mono::gcd(lh, lt(cand[a])) == 0) continue;
      next.insert({ord_.key(lcms[a]), cand[a], hi, lcms[a]});
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> act;
    for (std::size_t g : active_)
      if (!mono::divides(lh, lt(g))) act.push_back(g);
    act.push_back(hi);
    std::sort(act.begin(), act.end(), [&](std::size_t a, std::size_t b) {
      const auto ka = ord_.key(lt(a)), kb = ord_.key(lt(b));
      return ka != kb ? ka < kb : a < b;
    });
    active_ = std::move(act);
  }

  IPoly reduce(const IPoly& f) {
    Reducer r(p_, ord_);
    r.add(f, 0, 1, 0);
    return r.reduce(polys_, active_);
  }

  void run() {
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const IPoly& gi = polys_[pr.i];
      const IPoly& gj = polys_[pr.j];
      Reducer r(p_, ord_);
      r.add(gi, 1, 1, mono::quot(pr.lcm, gi.front().m));
      r.add(gj, 1, mod_neg(1, p_), mono::quot(pr.lcm, gj.front().m));
      IPoly h = r.reduce(polys_, active_);
      if (!h.empty()) insert(std::move(h));
    }
  }

  std::vector<IPoly> reduced_basis() {
    std::vector<IPoly> out;
    for (std::size_t idx : active_) {
      std::vector<std::size_t> others;
      for (std::size_t o : active_)
        if (o != idx) others.push_back(o);
      Reducer r(p_, ord_);
      r.add(polys_[idx], 1, 1, 0);
      IPoly tail = r.reduce(polys_, others);
      IPoly g;
      g.push_back(polys_[idx].front());
      g.insert(g.end(), tail.begin(), tail.end());
      out.push_back(std::move(g));
    }
    return out;
  }

 private:
  Mono lt(std::size_t i) const { return polys_[i].front().m; }

  std::uint32_t p_;
  const WeightedOrder& ord_;
  std::vector<IPoly> polys_;
  std::vector<std::size_t> active_;
  std::set<Pair> pairs_;
};

}  // namespace

std::vector<Mono> GroebnerBasis::leading_monomials() const {
  std::vector<Mono> out;
  for (const auto& g : generators) out.push_back(leading_monomial(g, order));
  return out;
}

Mono leading_monomial(const PolyFp& f, const WeightedOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  Mono best = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms())
    if (order.greater(m, best)) best = m;
  return best;
}

GroebnerBasis buchberger(const std::vector<PolyFp>& gens, const WeightedOrder& order) {
  GroebnerBasis gb;
  gb.order = order;
  if (!gens.empty()) gb.p = gens.front().p();
  if (!is_prime(gb.p)) throw std::invalid_argument("buchberger: " + std::to_string(gb.p) + " is not prime");
  for (const auto& g : gens) {
    if (g.p() != gb.p) throw std::invalid_argument("buchberger: generators over different primes");
    if (g.nvars() != order.nvars()) throw std::invalid_argument("buchberger: variable count mismatch");
  }
  std::vector<IPoly> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(to_internal(g, order));
  std::sort(input.begin(), input.end(), [](const IPoly& a, const IPoly& b) { return a.front().key < b.front().key; });

  Engine eng(gb.p, order);
  for (const auto& f : input) {
    IPoly h = eng.reduce(f);
    if (!h.empty()) eng.insert(std::move(h));
  }
  eng.run();
  for (const auto& g : eng.reduced_basis()) gb.generators.push_back(to_external(g, gb.p, order.nvars()));
  std::sort(gb.generators.begin(), gb.generators.end(), [&](const PolyFp& a, const PolyFp& b) {
    return order.key(leading_monomial(a, order)) < order.key(leading_monomial(b, order));
  });
  return gb;
}

PolyFp normal_form(const PolyFp& f, const GroebnerBasis& gb) {
  std::vector<IPoly> basis;
  std::vector<std::size_t> active;
  for (const auto& g : gb.generators) {
    active.push_back(basis.size());
    basis.push_back(to_internal(g, gb.order));
  }
  Reducer r(gb.p, gb.order);
  IPoly in = to_internal(f, gb.order);
  r.add(in, 0, 1, 0);
  return to_external(r.reduce(basis, active), gb.p, gb.order.nvars());
}

std::optional<std::uint64_t> standard_monomial_count(const std::vector<Mono>& leading, int nvars) {
  if (std::find(leading.begin(), leading.end(), Mono{0}) != leading.end()) return 0;
  std::vector<unsigned> bound(static_cast<std::size_t>(nvars), 0);
  for (int v = 0; v < nvars; ++v) {
    for (Mono m : leading) {
      if (m == mono::single(v, mono::exp(m, v))) {
        const unsigned e = mono::exp(m, v);
        if (bound[static_cast<std::size_t>(v)] == 0 || e < bound[static_cast<std::size_t>(v)]) bound[static_cast<std::size_t>(v)] = e;
      }
    }
    if (bound[static_cast<std::size_t>(v)] == 0) return std::nullopt;
  }
  const int last = nvars - 1;
  std::uint64_t total = 0;
  std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0);
  // Odometer over all variables but the last; count the admissible range of the last.
  while (true) {
    unsigned lim = bound[static_cast<std::size_t>(last)];
    Mono prefix = 0;
    for (int v = 0; v < last; ++v) prefix |= mono::single(v, e[static_cast<std::size_t>(v)]);
    for (Mono m : leading) {
      const Mono head = m & ~(mono::kFieldMask << (mono::kBits * last));
      if (mono::divides(head, prefix)) lim = std::min(lim, mono::exp(m, last));
    }
    total += lim;
    int v = last - 1;
    while (v >= 0) {
      auto& ev = e[static_cast<std::size_t>(v)];
      if (++ev < bound[static_cast<std::size_t>(v)]) break;
      ev = 0;
      --v;
    }
    if (v < 0) break;
  }
  return total;
}

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb) {
  return standard_monomial_count(gb.leading_monomials(), gb.order.nvars());
}

namespace {

void enumerate_upto(const WeightedOrder& ord, int v, long budget, Mono acc, const std::vector<Mono>& leading,
                    std::vector<std::int64_t>& out, long m_max) {
  if (v == ord.nvars()) {
    for (Mono l : leading)
      if (mono::divides(l, acc)) return;
    ++out[static_cast<std::size_t>(m_max - budget)];
    return;
  }
  const int w = ord.weights()[static_cast<std::size_t>(v)];
  for (long e = 0; e * w <= budget; ++e)
    enumerate_upto(ord, v + 1, budget - e * w, acc | mono::single(v, static_cast<unsigned>(e)), leading, out, m_max);
}

void enumerate_exact(const WeightedOrder& ord, int v, long rest, Mono acc, std::vector<Mono>& out) {
  const int n = ord.nvars();
  const int w = ord.weights()[static_cast<std::size_t>(v)];
  if (v == n - 1) {
    if (rest % w == 0) out.push_back(acc | mono::single(v, static_cast<unsigned>(rest / w)));
    return;
  }
  for (long e = 0; e * w <= rest; ++e)
    enumerate_exact(ord, v + 1, rest - e * w, acc | mono::single(v, static_cast<unsigned>(e)), out);
}

}  // namespace

std::vector<std::int64_t> graded_standard_counts(const std::vector<Mono>& leading, const WeightedOrder& order,
                                                 long m_max) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(m_max, -1L) + 1), 0);
  if (m_max < 0) return out;
  enumerate_upto(order, 0, m_max, 0, leading, out, m_max);
  return out;
}

std::vector<std::int64_t> graded_dimensions(const GroebnerBasis& gb, const WeightedOrder& order, long m_max) {
  return graded_standard_counts(gb.leading_monomials(), order, m_max);
}

std::vector<Mono> monomials_of_degree(const WeightedOrder& order, long m) {
  std::vector<Mono> out;
  if (m < 0) return out;
  enumerate_exact(order, 0, m, 0, out);
  std::sort(out.begin(), out.end(), [&](Mono a, Mono b) { return order.key(a) < order.key(b); });
  return out;
}

}  // namespace adehk

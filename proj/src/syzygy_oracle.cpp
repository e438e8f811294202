#include "adehk/syzygy_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "adehk/error.hpp"
#include "adehk/int_poly.hpp"

namespace adehk {

namespace {

using Vec = std::vector<std::pair<Mono, Fq>>;

Vec to_vec(const FieldFq& k, const GaussPoly& f) {
  std::map<Mono, Fq> acc;
  auto put = [&](Mono m, Fq c) {
    auto& slot = acc[m];
    slot = k.add(slot, c);
  };
  for (auto [m, c] : f.re.terms()) put(m, k.from_gauss(c, 0));
  for (auto [m, c] : f.im.terms()) put(m, k.from_gauss(0, c));
  Vec out;
  for (auto [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, c);
  return out;
}

class Oracle {
 public:
  Oracle(const FieldFq& k, const std::optional<GaussPoly>& F, const WeightedOrder& ord) : k_(k), ord_(ord) {
    if (F) {
      Vec f = to_vec(k, *F);
      if (f.empty()) throw std::invalid_argument("syzygy oracle: F is zero");
      if (!F->homogeneous_degree(ord.weights())) throw std::invalid_argument("syzygy oracle: F is not homogeneous");
      auto lead = std::max_element(f.begin(), f.end(),
                                   [&](const auto& a, const auto& b) { return ord.key(a.first) < ord.key(b.first); });
      lt_ = lead->first;
      const Fq inv = k.inv(lead->second);
      for (auto [m, c] : f)
        if (m != lt_) tail_.emplace_back(m, k.neg(k.mul(c, inv)));
      has_f_ = true;
    }
  }

  const std::vector<Mono>& basis(long m) {
    auto it = basis_.find(m);
    if (it != basis_.end()) return it->second;
    std::vector<Mono> all = monomials_of_degree(ord_, m), keep;
    for (Mono x : all)
      if (!has_f_ || !mono::divides(lt_, x)) keep.push_back(x);
    auto& slot = basis_[m];
    slot = std::move(keep);
    return slot;
  }

  const Vec& nf(Mono m) {
    auto it = nf_.find(m);
    if (it != nf_.end()) return it->second;
    Vec out;
    if (!has_f_ || !mono::divides(lt_, m)) {
      out.emplace_back(m, Fq{1, 0});
    } else {
      const Mono u = mono::quot(m, lt_);
      std::map<Mono, Fq> acc;
      for (auto [t, c] : tail_) {
        const Vec sub = nf(mono::mul(u, t));
        for (auto [mm, cc] : sub) {
          auto& slot = acc[mm];
          slot = k_.add(slot, k_.mul(c, cc));
        }
      }
      for (auto [mm, cc] : acc)
        if (!cc.is_zero()) out.emplace_back(mm, cc);
    }
    auto& slot = nf_[m];
    slot = std::move(out);
    return slot;
  }

  std::int64_t rank(const std::vector<std::vector<Fq>>& rows, std::size_t width) {
    std::vector<std::vector<Fq>> piv;
    std::vector<std::size_t> pcol;
    for (auto row : rows) {
      for (std::size_t r = 0; r < piv.size(); ++r) {
        const Fq c = row[pcol[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = pcol[r]; j < width; ++j)
          if (!piv[r][j].is_zero()) row[j] = k_.sub(row[j], k_.mul(c, piv[r][j]));
      }
      std::size_t lead = 0;
      while (lead < width && row[lead].is_zero()) ++lead;
      if (lead == width) continue;
      const Fq inv = k_.inv(row[lead]);
      for (std::size_t j = lead; j < width; ++j) row[j] = k_.mul(row[j], inv);
      piv.push_back(std::move(row));
      pcol.push_back(lead);
    }
    return static_cast<std::int64_t>(piv.size());
  }

  const FieldFq& k_;
  const WeightedOrder& ord_;
  bool has_f_ = false;
  Mono lt_ = 0;
  Vec tail_;
  std::unordered_map<long, std::vector<Mono>> basis_;
  std::unordered_map<Mono, Vec> nf_;
};

}  // namespace

std::vector<std::int64_t> syzygy_graded_dimensions(const FieldFq& field, const std::optional<GaussPoly>& F,
                                                   const std::vector<GaussPoly>& gens, const WeightedOrder& order,
                                                   long m_max) {
  Oracle o(field, F, order);
  std::vector<Vec> g;
  std::vector<long> deg;
  for (const auto& f : gens) {
    auto d = f.homogeneous_degree(order.weights());
    if (!d) throw std::invalid_argument("syzygy oracle: generator " + f.str() + " is not homogeneous");
    g.push_back(to_vec(field, f));
    deg.push_back(*d);
  }
  std::vector<std::int64_t> out;
  for (long m = 0; m <= m_max; ++m) {
    const auto& target = o.basis(m);
    std::unordered_map<Mono, std::size_t> index;
    for (std::size_t j = 0; j < target.size(); ++j) index[target[j]] = j;
    std::vector<std::vector<Fq>> rows;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (m - deg[i] < 0) continue;
      for (Mono u : o.basis(m - deg[i])) {
        std::vector<Fq> row(target.size());
        for (auto [t, c] : g[i]) {
          for (auto [mm, cc] : o.nf(mono::mul(u, t))) {
            auto& slot = row[index.at(mm)];
            slot = field.add(slot, field.mul(c, cc));
          }
        }
        rows.push_back(std::move(row));
      }
    }
    const auto n = static_cast<std::int64_t>(rows.size());
    out.push_back(n - o.rank(rows, target.size()));
  }
  return out;
}

std::vector<std::int64_t> syzygy_graded_dimensions(const std::optional<PolyFp>& F, const std::vector<PolyFp>& gens,
                                                   const WeightedOrder& order, long m_max) {
  std::uint32_t p = F ? F->p() : (gens.empty() ? 2 : gens.front().p());
  auto lift = [](const PolyFp& f) {
    ZPoly z;
    for (auto [m, c] : f.terms()) z.add_term(m, c);
    return GaussPoly(z);
  };
  std::optional<GaussPoly> gf;
  if (F) gf = lift(*F);
  std::vector<GaussPoly> gg;
  for (const auto& f : gens) gg.push_back(lift(f));
  return syzygy_graded_dimensions(FieldFq(p), gf, gg, order, m_max);
}

std::vector<std::int64_t> ring_graded_dimensions(const std::optional<GaussPoly>& F, const WeightedOrder& order,
                                                 long m_max) {
  FieldFq k(2);
  Oracle o(k, F, order);
  std::vector<std::int64_t> out;
  for (long m = 0; m <= m_max; ++m) out.push_back(static_cast<std::int64_t>(o.basis(m).size()));
  return out;
}

std::pair<long, long> split_degrees_rank2(const std::vector<PolyFp>& gens, const WeightedOrder& order) {
  if (gens.size() != 3 || order.nvars() != 2) throw std::invalid_argument("split_degrees_rank2: three generators in two variables");
  long total = 0;
  for (const auto& f : gens) {
    auto d = f.homogeneous_degree(order.weights());
    if (!d) throw std::invalid_argument("split_degrees_rank2: non-homogeneous generator");
    total += *d;
  }
  if (!quotient_dimension(buchberger(gens, order)))
    throw InconsistencyError("split_degrees_rank2: quotient is not finite-dimensional");
  auto h = syzygy_graded_dimensions(std::nullopt, gens, order, total);
  IntPoly hs;
  for (long m = 0; m <= total; ++m) hs.add_term(m, h[static_cast<std::size_t>(m)]);
  IntPoly num = hs.times_one_minus(order.weights()[0]).times_one_minus(order.weights()[1]);
  std::vector<long> degs;
  for (auto [e, c] : num.terms()) {
    if (e > total) continue;
    if (c <= 0) throw InconsistencyError("split_degrees_rank2: numerator is not of the form t^m + t^n");
    for (std::int64_t k = 0; k < c; ++k) degs.push_back(e);
  }
  if (degs.size() != 2) throw InconsistencyError("split_degrees_rank2: numerator is not of the form t^m + t^n");
  if (degs[0] + degs[1] != total) throw InconsistencyError("split_degrees_rank2: degree sum identity fails");
  return {degs[0], degs[1]};
}

}  // namespace adehk

#include "adehk/matrix_factorization.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "adehk/error.hpp"
#include "adehk/field.hpp"
#include "adehk/groebner.hpp"

namespace adehk {

namespace {

void require_rect(const PolyMatrix& a, const char* what) {
  for (const auto& row : a)
    if (row.size() != a.front().size()) throw std::invalid_argument(std::string(what) + ": ragged matrix");
}

}  // namespace

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty()) return {};
  require_rect(a, "mat_mul");
  require_rect(b, "mat_mul");
  if (a.front().size() != b.size()) throw std::invalid_argument("mat_mul: inner dimensions differ");
  PolyMatrix c(a.size(), std::vector<ZPoly>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

PolyMatrix transpose(const PolyMatrix& a) {
  if (a.empty()) return {};
  PolyMatrix t(a.front().size(), std::vector<ZPoly>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

PolyMatrix scalar_identity(std::size_t n, const ZPoly& f) {
  PolyMatrix e(n, std::vector<ZPoly>(n));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = f;
  return e;
}

PolyMatrix select_columns(const PolyMatrix& a, const std::vector<int>& columns) {
  PolyMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int c : columns) {
      if (c < 1 || static_cast<std::size_t>(c) > a[i].size())
        throw std::out_of_range("select_columns: column " + std::to_string(c) + " out of range");
      out[i].push_back(a[i][static_cast<std::size_t>(c - 1)]);
    }
  return out;
}

PolyMatrix block_sum(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size() + b.size();
  const std::size_t ca = a.empty() ? 0 : a.front().size();
  const std::size_t cb = b.empty() ? 0 : b.front().size();
  PolyMatrix out(n, std::vector<ZPoly>(ca + cb));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ca; ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < cb; ++j) out[a.size() + i][ca + j] = b[i][j];
  return out;
}

std::string matrix_str(const PolyMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < a[i].size(); ++j) s += (j ? ", " : "") + a[i][j].str();
    s += "]";
  }
  return s + "]";
}

ZPoly determinant(const PolyMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return ZPoly(1);
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  std::function<ZPoly(std::size_t, std::vector<std::size_t>&)> rec = [&](std::size_t row, std::vector<std::size_t>& left) {
    if (left.size() == 1) return a[row][left[0]];
    ZPoly acc;
    for (std::size_t k = 0; k < left.size(); ++k) {
      const ZPoly& e = a[row][left[k]];
      if (e.is_zero()) continue;
      std::vector<std::size_t> rest;
      for (std::size_t l = 0; l < left.size(); ++l)
        if (l != k) rest.push_back(left[l]);
      ZPoly minor = rec(row + 1, rest);
      if (minor.is_zero()) continue;
      if (k % 2 == 0) acc += e * minor;
      else acc -= e * minor;
    }
    return acc;
  };
  return rec(0, cols);
}

std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  const WeightedOrder ord({1, 1, 1});
  auto lead = [&](const ZPoly& f) {
    return *std::max_element(f.terms().begin(), f.terms().end(),
                             [&](const auto& x, const auto& y) { return ord.key(x.first) < ord.key(y.first); });
  };
  const auto [lb, cb] = lead(b);
  ZPoly rem = a, q;
  while (!rem.is_zero()) {
    const auto [lr, cr] = lead(rem);
    if (!mono::divides(lb, lr) || cr % cb != 0) return std::nullopt;
    const ZPoly t = ZPoly::term(cr / cb, mono::quot(lr, lb));
    q += t;
    rem -= t * b;
  }
  return q;
}

namespace {

MfVerdict check(const MatFac& mf, const std::function<bool(const ZPoly&, const ZPoly&)>& eq,
                const std::function<std::int64_t(std::int64_t)>& reduce) {
  const std::size_t n = mf.phi.size();
  if (n == 0 || mf.psi.size() != n) throw std::invalid_argument("verify: phi and psi must be square of equal size");
  for (const auto& row : mf.phi)
    if (row.size() != n) throw std::invalid_argument("verify: phi is not square");
  for (const auto& row : mf.psi)
    if (row.size() != n) throw std::invalid_argument("verify: psi is not square");
  MfVerdict v;
  const PolyMatrix fe = scalar_identity(n, mf.F);
  auto same = [&](const PolyMatrix& x) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!eq(x[i][j], fe[i][j])) return false;
    return true;
  };
  v.valid = same(mat_mul(mf.phi, mf.psi)) && same(mat_mul(mf.psi, mf.phi));
  v.reduced = true;
  for (const auto* m : {&mf.phi, &mf.psi})
    for (const auto& row : *m)
      for (const auto& e : row)
        if (reduce(e.constant_term()) != 0) v.reduced = false;
  return v;
}

}  // namespace

MfVerdict verify(const MatFac& mf) {
  return check(mf, [](const ZPoly& a, const ZPoly& b) { return a == b; }, [](std::int64_t c) { return c; });
}

MfVerdict verify_mod(const MatFac& mf, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("verify_mod: p is not prime");
  return check(
      mf, [p](const ZPoly& a, const ZPoly& b) { return PolyFp(a - b, p, 3).is_zero(); },
      [p](std::int64_t c) { return static_cast<std::int64_t>(mod_reduce(c, p)); });
}

int coker_rank(const MatFac& mf) {
  ZPoly d = determinant(mf.phi);
  if (d.is_zero()) throw InconsistencyError("coker_rank: det(phi) = 0");
  int i = 0;
  while (true) {
    if (d == ZPoly(1) || d == ZPoly(-1)) return i;
    auto q = exact_divide(d, mf.F);
    if (!q) throw InconsistencyError("coker_rank: det(phi) is not a unit times a power of F");
    d = std::move(*q);
    ++i;
  }
}

namespace {

using Vec = std::vector<std::pair<Mono, std::uint32_t>>;

/// Normal form modulo F over F_p with respect to LT(F).
class Reducer {
 public:
  Reducer(const ZPoly& F, const WeightedOrder& ord, std::uint32_t p) : p_(p), ord_(ord) {
    PolyFp f(F, p, 3);
    if (f.is_zero()) throw std::invalid_argument("kernel_vector: F vanishes mod p");
    lt_ = leading_monomial(f, ord);
    const std::uint32_t inv = mod_inv(f.terms().at(lt_), p);
    for (auto [m, c] : f.terms())
      if (m != lt_) tail_.emplace_back(m, mod_neg(mod_mul(c, inv, p), p));
  }

  bool standard(Mono m) const { return !mono::divides(lt_, m); }

  std::vector<Mono> basis(long deg) const {
    if (deg < 0) return {};
    std::vector<Mono> out;
    for (Mono m : monomials_of_degree(ord_, deg))
      if (standard(m)) out.push_back(m);
    return out;
  }

  const Vec& nf(Mono m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Vec out;
    if (standard(m)) {
      out.emplace_back(m, 1);
    } else {
      const Mono u = mono::quot(m, lt_);
      std::map<Mono, std::uint32_t> acc;
      for (auto [t, c] : tail_)
        for (auto [mm, cc] : nf(mono::mul(u, t))) acc[mm] = mod_add(acc[mm], mod_mul(c, cc, p_), p_);
      for (auto [mm, cc] : acc)
        if (cc) out.emplace_back(mm, cc);
    }
    return memo_[m] = std::move(out);
  }

 private:
  std::uint32_t p_;
  const WeightedOrder& ord_;
  Mono lt_ = 0;
  Vec tail_;
  std::unordered_map<Mono, Vec> memo_;
};

std::int64_t lift(std::uint32_t c, std::uint32_t p) {
  return c > p / 2 ? static_cast<std::int64_t>(c) - static_cast<std::int64_t>(p) : static_cast<std::int64_t>(c);
}

/// Nullspace vector of a dense matrix over F_p, or empty if the kernel is zero.
std::vector<std::uint32_t> first_null_vector(std::vector<std::vector<std::uint32_t>> a, std::size_t width, std::uint32_t p) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < a.size(); ++c) {
    std::size_t k = r;
    while (k < a.size() && a[k][c] == 0) ++k;
    if (k == a.size()) continue;
    std::swap(a[k], a[r]);
    const std::uint32_t inv = mod_inv(a[r][c], p);
    for (auto& x : a[r]) x = mod_mul(x, inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint32_t f = a[i][c];
      for (std::size_t j = c; j < width; ++j) a[i][j] = mod_sub(a[i][j], mod_mul(f, a[r][j], p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(width, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free = width;
  for (std::size_t c = 0; c < width; ++c)
    if (!is_pivot[c]) {
      free = c;
      break;
    }
  if (free == width) return {};
  std::vector<std::uint32_t> x(width, 0);
  x[free] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = mod_neg(a[i][free], p);
  return x;
}

}  // namespace

std::vector<ZPoly> kernel_vector(const PolyMatrix& psi_j, const ZPoly& F, const std::vector<int>& weights,
                                 std::uint32_t p, std::optional<long> degree_bound) {
  if (!is_prime(p)) throw std::invalid_argument("kernel_vector: p is not prime");
  if (psi_j.empty() || psi_j.front().empty()) throw std::invalid_argument("kernel_vector: empty matrix");
  require_rect(psi_j, "kernel_vector");
  const std::size_t rows = psi_j.size(), cols = psi_j.front().size();
  const WeightedOrder ord(weights);

  std::vector<std::vector<std::optional<long>>> deg(rows, std::vector<std::optional<long>>(cols));
  long bound = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    long row_sum = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (PolyFp(psi_j[i][j], p, 3).is_zero()) continue;
      auto d = psi_j[i][j].homogeneous_degree(weights);
      if (!d) throw std::invalid_argument("kernel_vector: entry " + psi_j[i][j].str() + " is not homogeneous");
      deg[i][j] = d;
      row_sum += *d;
    }
    bound = std::max(bound, row_sum);
  }
  if (degree_bound) bound = *degree_bound;
  if (bound < 0) throw std::invalid_argument("kernel_vector: negative degree bound");

  // Column offsets per connected component of the row/column incidence graph.
  std::vector<std::optional<long>> off(cols);
  std::vector<std::optional<long>> row_deg(rows);
  std::vector<int> comp(cols, -1);
  int ncomp = 0;
  for (std::size_t start = 0; start < cols; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    off[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t j = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < rows; ++i) {
        if (!deg[i][j]) continue;
        const long d_row = *deg[i][j] + *off[j];
        if (row_deg[i] && *row_deg[i] != d_row) throw std::invalid_argument("kernel_vector: matrix is not homogeneous");
        row_deg[i] = d_row;
        for (std::size_t k = 0; k < cols; ++k) {
          if (!deg[i][k]) continue;
          const long o = d_row - *deg[i][k];
          if (off[k]) {
            if (*off[k] != o) throw std::invalid_argument("kernel_vector: matrix is not homogeneous");
            continue;
          }
          off[k] = o;
          comp[k] = ncomp;
          stack.push_back(k);
        }
      }
    }
    ++ncomp;
  }

  Reducer red(F, ord, p);
  std::optional<std::pair<long, std::vector<PolyFp>>> best;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members, touched;
    long omax = 0;
    bool first = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (comp[j] == c) {
        members.push_back(j);
        omax = first ? *off[j] : std::max(omax, *off[j]);
        first = false;
      }
    for (std::size_t i = 0; i < rows; ++i)
      for (auto j : members)
        if (deg[i][j]) {
          touched.push_back(i);
          break;
        }
    for (long top = 0; top <= bound; ++top) {
      if (best && top >= best->first) break;
      const long s = top - omax;
      std::vector<std::vector<Mono>> unk(cols);
      std::vector<std::size_t> start(cols, 0);
      std::size_t width = 0;
      for (auto j : members) {
        start[j] = width;
        unk[j] = red.basis(s + *off[j]);
        width += unk[j].size();
      }
      if (width == 0) continue;
      std::vector<std::vector<std::uint32_t>> a;
      for (auto i : touched) {
        const std::vector<Mono> target = red.basis(s + *row_deg[i]);
        std::unordered_map<Mono, std::size_t> index;
        for (std::size_t k = 0; k < target.size(); ++k) index[target[k]] = k;
        std::vector<std::vector<std::uint32_t>> block(target.size(), std::vector<std::uint32_t>(width, 0));
        for (auto j : members) {
          if (!deg[i][j]) continue;
          const PolyFp entry(psi_j[i][j], p, 3);
          for (std::size_t u = 0; u < unk[j].size(); ++u)
            for (auto [t, c0] : entry.terms())
              for (auto [mm, cc] : red.nf(mono::mul(t, unk[j][u]))) {
                auto& slot = block[index.at(mm)][start[j] + u];
                slot = mod_add(slot, mod_mul(c0, cc, p), p);
              }
        }
        for (auto& r : block) a.push_back(std::move(r));
      }
      auto x = first_null_vector(std::move(a), width, p);
      if (x.empty()) continue;
      std::vector<PolyFp> v(cols, PolyFp(p, 3));
      for (auto j : members)
        for (std::size_t u = 0; u < unk[j].size(); ++u)
          if (x[start[j] + u]) v[j].add_term(unk[j][u], x[start[j] + u]);
      best = std::make_pair(top, std::move(v));
      break;
    }
  }
  if (!best) throw InconsistencyError("kernel_vector: no solution with entries of degree <= " + std::to_string(bound));

  std::vector<PolyFp>& v = best->second;
  std::uint32_t lead = 0;
  for (const auto& f : v)
    if (!f.is_zero()) {
      lead = f.terms().at(leading_monomial(f, ord));
      break;
    }
  const std::uint32_t inv = mod_inv(lead, p);
  std::vector<ZPoly> out;
  for (auto& f : v) {
    ZPoly z;
    for (auto [m, c] : f.terms()) z.add_term(m, lift(mod_mul(c, inv, p), p));
    out.push_back(std::move(z));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    PolyFp sum(p, 3);
    for (std::size_t j = 0; j < cols; ++j) sum += PolyFp(psi_j[i][j] * out[j], p, 3);
    std::map<Mono, std::uint32_t> acc;
    for (auto [m, c] : sum.terms())
      for (auto [mm, cc] : red.nf(m)) acc[mm] = mod_add(acc[mm], mod_mul(c, cc, p), p);
    for (auto [mm, cc] : acc)
      if (cc) throw std::logic_error("kernel_vector: solution fails the re-multiplication check");
  }
  return out;
}

bool column_choice_check(const PolyMatrix& psi_j, const ZPoly& F, const std::vector<int>& weights, std::uint32_t p) {
  if (psi_j.empty() || psi_j.front().empty()) return false;
  require_rect(psi_j, "column_choice_check");
  const std::size_t rows = psi_j.size(), cols = psi_j.front().size();
  const std::size_t m = cols - 1;
  if (m == 0) return true;
  if (m > rows) return false;
  std::vector<PolyFp> gens{PolyFp(F, p, 3)};
  std::vector<std::size_t> rsel(m), csel(m);
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t, const std::function<void()>&)> choose =
      [&](std::size_t from, std::size_t n, std::vector<std::size_t>& sel, std::size_t depth, const std::function<void()>& f) {
        if (depth == sel.size()) {
          f();
          return;
        }
        for (std::size_t k = from; k < n; ++k) {
          sel[depth] = k;
          choose(k + 1, n, sel, depth + 1, f);
        }
      };
  choose(0, rows, rsel, 0, [&] {
    choose(0, cols, csel, 0, [&] {
      PolyMatrix sub(m, std::vector<ZPoly>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub[i][j] = psi_j[rsel[i]][csel[j]];
      PolyFp d(determinant(sub), p, 3);
      if (!d.is_zero()) gens.push_back(std::move(d));
    });
  });
  return quotient_dimension(buchberger(gens, WeightedOrder(weights))).has_value();
}

PolyMatrix parse_matrix(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) { throw ParseError("cannot parse matrix '" + std::string(text) + "': " + why); };
  std::size_t i = 0;
  auto expect = [&](char ch) {
    if (i >= s.size() || s[i] != ch) fail(std::string("expected '") + ch + "' at position " + std::to_string(i));
    ++i;
  };
  PolyMatrix out;
  expect('[');
  while (true) {
    expect('[');
    std::vector<ZPoly> row;
    while (true) {
      const std::size_t j = s.find_first_of(",]", i);
      if (j == std::string::npos) fail("unterminated row");
      row.push_back(ZPoly::parse(s.substr(i, j - i)));
      i = j;
      if (s[i] == ']') break;
      ++i;
    }
    expect(']');
    out.push_back(std::move(row));
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  if (i != s.size()) fail("trailing characters");
  for (const auto& row : out)
    if (row.size() != out.front().size()) fail("rows have different lengths");
  return out;
}

MatFac parse_matfac(std::string_view text, const ZPoly& F) {
  std::vector<std::string> blocks;
  std::string outside;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (depth > 0) cur += ch;
    else outside += ch;
    if (ch == ']') {
      if (--depth < 0) throw ParseError("unbalanced ']' in matrix factorization file");
      if (depth == 0) {
        blocks.push_back(cur);
        cur.clear();
        outside += ' ';
      }
    }
  }
  if (depth != 0) throw ParseError("unbalanced '[' in matrix factorization file");
  if (blocks.size() != 2) throw ParseError("expected two matrices (phi and psi), found " + std::to_string(blocks.size()));
  std::string words;
  for (char ch : outside)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '=' && ch != ';' && ch != ',') words += ch;
  if (!words.empty() && words != "phipsi") throw ParseError("unexpected text outside matrices: '" + words + "'");
  MatFac mf{parse_matrix(blocks[0]), parse_matrix(blocks[1]), F};
  return mf;
}

MatFac example_e8_size4() {
  return parse_matfac(
      "phi = [[X, Y, Z, 0], [-Y^2, X, 0, Z], [-Z^4, 0, X, -Y], [0, -Z^4, Y^2, X]]\n"
      "psi = [[X, -Y, -Z, 0], [Y^2, X, 0, -Z], [Z^4, 0, X, Y], [0, Z^4, -Y^2, X]]",
      ZPoly::parse("X^2+Y^3+Z^5"));
}

PolyMatrix example_e8_alpha() { return parse_matrix("[[0,0,0,-1],[0,0,1,0],[0,-1,0,0],[1,0,0,0]]"); }

std::vector<ShippedMf> shipped_matrix_factorizations() {
  std::vector<ShippedMf> out;
  out.push_back({"E8 M_1", make_ring(Family::E8), 1, 2, example_e8_size4()});
  for (int n = 1; n <= 4; ++n) {
    const AdeRingSpec r = make_ring(Family::A, n);
    for (int m = 1; m <= n; ++m) {
      const ZPoly xm = ZPoly::var(0, static_cast<unsigned>(m));
      const ZPoly xr = ZPoly::var(0, static_cast<unsigned>(n + 1 - m));
      const ZPoly y = ZPoly::var(1), z = ZPoly::var(2);
      MatFac mf{{{xm, y}, {z, xr}}, {{xr, -y}, {-z, xm}}, r.F};
      out.push_back({r.dynkin_name() + " M_" + std::to_string(m), r, m, 1, mf});
    }
  }
  auto x_y_pair = [](const AdeRingSpec& r, int index) {
    const ZPoly x = ZPoly::var(0), y = ZPoly::var(1);
    // F = X^2 + Y G
    const ZPoly g = *exact_divide(r.F - x * x, y);
    MatFac mf{{{x, y}, {-g, x}}, {{x, -y}, {g, x}}, r.F};
    return ShippedMf{r.dynkin_name() + " M_" + std::to_string(index), r, index, 1, mf};
  };
  for (int n = 2; n <= 5; ++n) out.push_back(x_y_pair(make_ring(Family::D, n), 1));
  out.push_back(x_y_pair(make_ring(Family::E7), 7));
  return out;
}

}  // namespace adehk

#include "adehk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "adehk/error.hpp"
#include "adehk/field.hpp"
#include "adehk/int_poly.hpp"

namespace adehk {

namespace mono {

Mono make(std::initializer_list<unsigned> exps) { return make(std::vector<unsigned>(exps)); }

Mono make(const std::vector<unsigned>& exps) {
  if (exps.size() > 3) throw std::invalid_argument("at most three variables");
  Mono m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) m |= single(static_cast<int>(i), exps[i]);
  return m;
}

Mono single(int var, unsigned e) {
  if (e > kMaxExp) throw std::overflow_error("exponent too large for packed monomial");
  return static_cast<Mono>(e) << (kBits * var);
}

Mono mul(Mono a, Mono b) {
  Mono r = a + b;
  if (r & kGuard) throw std::overflow_error("exponent overflow in monomial product");
  return r;
}

Mono lcm(Mono a, Mono b) {
  Mono r = 0;
  for (int v = 0; v < 3; ++v) r |= single(v, std::max(exp(a, v), exp(b, v)));
  return r;
}

Mono gcd(Mono a, Mono b) {
  Mono r = 0;
  for (int v = 0; v < 3; ++v) r |= single(v, std::min(exp(a, v), exp(b, v)));
  return r;
}

Mono pow(Mono a, unsigned k) {
  Mono r = 0;
  for (int v = 0; v < 3; ++v) {
    const std::uint64_t e = std::uint64_t{exp(a, v)} * k;
    if (e > kMaxExp) throw std::overflow_error("exponent overflow in monomial power");
    r |= single(v, static_cast<unsigned>(e));
  }
  return r;
}

long wdeg(Mono m, const std::vector<int>& weights) {
  long d = 0;
  for (std::size_t v = 0; v < weights.size(); ++v) d += static_cast<long>(weights[v]) * exp(m, static_cast<int>(v));
  return d;
}

unsigned total_degree(Mono m) { return exp(m, 0) + exp(m, 1) + exp(m, 2); }

}  // namespace mono

std::string mono_str(Mono m, const VarSet& vars) {
  std::string out;
  for (int v = 0; v < vars.size(); ++v) {
    const unsigned e = mono::exp(m, v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.names[static_cast<std::size_t>(v)];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Lex order with the first variable most significant; used only for printing.
std::vector<Mono> print_order(std::vector<Mono> ms) {
  std::sort(ms.begin(), ms.end(), [](Mono a, Mono b) {
    for (int v = 0; v < 3; ++v)
      if (mono::exp(a, v) != mono::exp(b, v)) return mono::exp(a, v) > mono::exp(b, v);
    return false;
  });
  return ms;
}

template <class Coef>
std::string format_terms(const std::map<Mono, Coef>& terms, const VarSet& vars, bool signed_coefs) {
  if (terms.empty()) return "0";
  std::vector<Mono> ms;
  for (const auto& [m, c] : terms) ms.push_back(m);
  std::string out;
  bool first = true;
  for (Mono m : print_order(ms)) {
    std::int64_t c = static_cast<std::int64_t>(terms.at(m));
    bool neg = signed_coefs && c < 0;
    std::int64_t mag = neg ? -c : c;
    if (neg) out += "-";
    else if (!first) out += "+";
    first = false;
    if (m == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono_str(m, vars);
    }
  }
  return out;
}

}  // namespace

ZPoly::ZPoly(std::int64_t c) { add_term(0, c); }

ZPoly ZPoly::term(std::int64_t c, Mono m) {
  ZPoly r;
  r.add_term(m, c);
  return r;
}

std::int64_t ZPoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void ZPoly::add_term(Mono m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (auto [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (auto [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

ZPoly ZPoly::operator-() const { return scaled(-1); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  for (auto [ma, ca] : a.terms_)
    for (auto [mb, cb] : b.terms_) r.add_term(mono::mul(ma, mb), checked_mul(ca, cb));
  return r;
}

ZPoly ZPoly::pow(unsigned k) const {
  ZPoly r(1), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

ZPoly ZPoly::scaled(std::int64_t c) const {
  ZPoly r;
  for (auto [m, v] : terms_) r.add_term(m, checked_mul(v, c));
  return r;
}

ZPoly ZPoly::times_mono(Mono m) const {
  ZPoly r;
  for (auto [mm, v] : terms_) r.terms_.emplace(mono::mul(mm, m), v);
  return r;
}

std::optional<long> ZPoly::homogeneous_degree(const std::vector<int>& weights) const {
  std::optional<long> d;
  for (const auto& [m, c] : terms_) {
    const long dm = mono::wdeg(m, weights);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

ZPoly ZPoly::scale_exponents(const std::vector<unsigned>& scale) const {
  ZPoly r;
  for (auto [m, c] : terms_) {
    Mono out = 0;
    for (std::size_t v = 0; v < scale.size(); ++v)
      out |= mono::single(static_cast<int>(v), mono::exp(m, static_cast<int>(v)) * scale[v]);
    r.add_term(out, c);
  }
  return r;
}

ZPoly ZPoly::remap_vars(const std::vector<int>& map) const {
  ZPoly r;
  for (auto [m, c] : terms_) {
    Mono out = 0;
    for (std::size_t v = 0; v < map.size(); ++v) {
      const unsigned e = mono::exp(m, static_cast<int>(v));
      if (e && map[v] < 0) throw std::invalid_argument("remap_vars: dropping a variable that occurs");
      if (e) out = mono::mul(out, mono::single(map[v], e));
    }
    r.add_term(out, c);
  }
  return r;
}

std::string ZPoly::str(const VarSet& vars) const { return format_terms(terms_, vars, true); }

ZPoly ZPoly::parse(std::string_view text, const VarSet& vars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) fail("empty input");
  std::size_t i = 0;
  auto read_uint = [&]() -> std::uint64_t {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected a number at position " + std::to_string(i));
    if (j - i > 18) fail("number too large");
    std::uint64_t v = std::stoull(s.substr(i, j - i));
    i = j;
    return v;
  };
  const bool single_char =
      std::all_of(vars.names.begin(), vars.names.end(), [](const std::string& n) { return n.size() == 1; });
  ZPoly r;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected + or - at position " + std::to_string(i));
    }
    std::int64_t coef = 1;
    std::vector<unsigned> exps(static_cast<std::size_t>(vars.size()), 0);
    bool any = false;
    while (true) {
      if (i >= s.size()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = checked_mul(coef, static_cast<std::int64_t>(read_uint()));
      } else {
        std::size_t j = i;
        if (single_char) {
          if (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
        } else {
          while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
        }
        const std::string name = s.substr(i, j - i);
        auto it = std::find(vars.names.begin(), vars.names.end(), name);
        if (name.empty() || it == vars.names.end()) fail("unknown variable '" + name + "'");
        i = j;
        std::uint64_t e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = read_uint();
        }
        auto& slot = exps[static_cast<std::size_t>(it - vars.names.begin())];
        if (slot + e > mono::kMaxExp) fail("exponent too large");
        slot += static_cast<unsigned>(e);
      }
      any = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      if (single_char && i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) continue;
      break;
    }
    if (!any) fail("empty term");
    r.add_term(mono::make(exps), sign * coef);
  }
  return r;
}

std::optional<long> GaussPoly::homogeneous_degree(const std::vector<int>& weights) const {
  auto dr = re.homogeneous_degree(weights);
  auto di = im.homogeneous_degree(weights);
  if (re.is_zero()) return di;
  if (im.is_zero()) return dr;
  if (!dr || !di || *dr != *di) return std::nullopt;
  return dr;
}

GaussPoly GaussPoly::parse(std::string_view text, const VarSet& vars) {
  GaussPoly out;
  std::string term;
  int sign = 1;
  auto flush = [&] {
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    bool imag = false;
    std::string body;
    for (std::size_t k = 0; k < term.size(); ++k) {
      if (term[k] == 'i') {
        if (imag) throw ParseError("repeated i in '" + std::string(text) + "'");
        imag = true;
        if (k + 1 < term.size() && term[k + 1] == '*') ++k;
        else if (!body.empty() && body.back() == '*') body.pop_back();
        continue;
      }
      body += term[k];
    }
    if (body.empty()) body = "1";
    ZPoly z = ZPoly::parse(body, vars).scaled(sign);
    if (imag) out.im += z;
    else out.re += z;
    term.clear();
  };
  bool start = true;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if ((ch == '+' || ch == '-') && !(term.empty() ? false : term.back() == '^')) {
      if (!start || !term.empty()) flush();
      sign = ch == '-' ? -1 : 1;
      start = false;
      continue;
    }
    term += ch;
    start = false;
  }
  flush();
  return out;
}

std::string GaussPoly::str(const VarSet& vars) const {
  if (im.is_zero()) return re.str(vars);
  std::string out = re.is_zero() ? "" : re.str(vars) + "+";
  return out + "i*(" + im.str(vars) + ")";
}

PolyFp::PolyFp(const ZPoly& f, std::uint32_t p, int nvars) : p_(p), nvars_(nvars) {
  for (auto [m, c] : f.terms()) add_term(m, mod_reduce(c, p));
}

PolyFp PolyFp::term(std::uint32_t p, int nvars, std::uint32_t c, Mono m) {
  PolyFp r(p, nvars);
  r.add_term(m, c % p);
  return r;
}

void PolyFp::add_term(Mono m, std::uint32_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = mod_add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

PolyFp& PolyFp::operator+=(const PolyFp& o) {
  for (auto [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyFp& PolyFp::operator-=(const PolyFp& o) {
  for (auto [m, c] : o.terms_) add_term(m, mod_neg(c, p_));
  return *this;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  PolyFp r(a.p_, a.nvars_);
  for (auto [ma, ca] : a.terms_)
    for (auto [mb, cb] : b.terms_) r.add_term(mono::mul(ma, mb), mod_mul(ca, cb, a.p_));
  return r;
}

PolyFp PolyFp::pow(unsigned k) const {
  PolyFp r = term(p_, nvars_, 1, 0), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

PolyFp PolyFp::scaled(std::uint32_t c) const {
  PolyFp r(p_, nvars_);
  for (auto [m, v] : terms_) r.add_term(m, mod_mul(v, c, p_));
  return r;
}

std::optional<long> PolyFp::homogeneous_degree(const std::vector<int>& weights) const {
  std::optional<long> d;
  for (const auto& [m, c] : terms_) {
    const long dm = mono::wdeg(m, weights);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

std::string PolyFp::str(const VarSet& vars) const { return format_terms(terms_, vars, false); }

}  // namespace adehk

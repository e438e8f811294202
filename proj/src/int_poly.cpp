#include "adehk/int_poly.hpp"

#include <cctype>
#include <stdexcept>

#include "adehk/error.hpp"

namespace adehk {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPoly coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPoly coefficient overflow");
  return r;
}

IntPoly IntPoly::monomial(long exp, std::int64_t c) {
  IntPoly p;
  p.add_term(exp, c);
  return p;
}

IntPoly IntPoly::one_minus(long w) {
  IntPoly p(1);
  p.add_term(w, -1);
  return p;
}

IntPoly IntPoly::geometric(long w, long k) {
  IntPoly p;
  for (long i = 0; i < k; ++i) p.add_term(i * w, 1);
  return p;
}

std::int64_t IntPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

void IntPoly::add_term(long exp, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::shifted(long l) const {
  IntPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + l, c);
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

IntPoly IntPoly::operator-() const { return scaled(-1); }

IntPoly IntPoly::scaled(std::int64_t c) const {
  IntPoly r;
  if (c == 0) return r;
  for (auto [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked_mul(v, c));
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
  return r;
}

IntPoly IntPoly::times_one_minus(long w) const { return *this - shifted(w); }

std::optional<IntPoly> IntPoly::divide_one_minus(long w) const {
  if (w <= 0) throw std::invalid_argument("divide_one_minus: weight must be positive");
  if (is_zero()) return IntPoly();
  // q(1 - t^w) = f  <=>  q_e = f_e + q_{e-w}, walking upward from the low end.
  IntPoly q;
  const long lo = low_degree();
  const long hi = high_degree();
  if (hi - lo < w) return std::nullopt;
  for (long e = lo; e <= hi - w; ++e) {
    std::int64_t v = coeff(e);
    auto it = q.terms_.find(e - w);
    if (it != q.terms_.end()) v = checked_add(v, it->second);
    if (v != 0) q.terms_.emplace_hint(q.terms_.end(), e, v);
  }
  if (q.times_one_minus(w) != *this) return std::nullopt;
  return q;
}

std::int64_t IntPoly::value_at_one() const {
  std::int64_t s = 0;
  for (auto [e, c] : terms_) s = checked_add(s, c);
  return s;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (c < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  IntPoly r;
  std::size_t i = 0;
  auto fail = [&] { throw ParseError("cannot parse polynomial in t: '" + std::string(text) + "'"); };
  auto read_int = [&](std::int64_t& out) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail();
    try {
      out = std::stoll(s.substr(i, j - i));
    } catch (const std::out_of_range&) {
      throw ParseError("coefficient out of range in '" + std::string(text) + "'");
    }
    i = j;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::int64_t c = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      read_int(c);
      have_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
      else if (i < s.size() && s[i] == 't') fail();
    }
    long e = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::int64_t sg = 1;
        if (i < s.size() && s[i] == '-') {
          sg = -1;
          ++i;
        }
        std::int64_t v;
        read_int(v);
        e = static_cast<long>(sg * v);
      }
    } else if (!have_coef) {
      fail();
    }
    r.add_term(e, sign * c);
  }
  return r;
}

}  // namespace adehk

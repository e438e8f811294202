#include "adehk/rat.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "adehk/error.hpp"

namespace adehk {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  if (s[0] == '+') s.erase(s.begin());
  return BigInt(s, 10);
}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  BigInt n = parse_bigint(text.substr(0, slash));
  BigInt d = parse_bigint(text.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rat::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rpow(const Rat& base, long exp) {
  if (exp >= 0) return Rat(ipow(base.num(), exp), ipow(base.den(), exp));
  if (base.is_zero()) throw std::domain_error("rpow: zero to a negative power");
  const auto e = static_cast<unsigned long>(-exp);
  return Rat(ipow(base.den(), e), ipow(base.num(), e));
}

std::int64_t to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("integer does not fit in 64 bits");
  return v.get_si();
}

}  // namespace adehk

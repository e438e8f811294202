#include "adehk/field.hpp"

#include <stdexcept>

namespace adehk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("mod_inv: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t sqrt_minus_one(std::uint32_t p) {
  if (p == 2) return 1;
  if (p % 4 != 1) throw std::domain_error("-1 is not a square mod " + std::to_string(p));
  for (std::uint32_t x = 2; x < p; ++x)
    if (mod_mul(x, x, p) == p - 1) return x;
  throw std::logic_error("sqrt_minus_one: not found");
}

FieldFq::FieldFq(std::uint32_t p) : p_(p), ext_(p % 4 == 3), i_(0) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!ext_) i_ = sqrt_minus_one(p);
}

Fq FieldFq::from_gauss(std::int64_t re, std::int64_t im) const {
  if (ext_) return {mod_reduce(re, p_), mod_reduce(im, p_)};
  return {mod_add(mod_reduce(re, p_), mod_mul(mod_reduce(im, p_), i_, p_), p_), 0};
}

Fq FieldFq::mul(Fq x, Fq y) const {
  if (!ext_) return {mod_mul(x.a, y.a, p_), 0};
  return {mod_sub(mod_mul(x.a, y.a, p_), mod_mul(x.b, y.b, p_), p_),
          mod_add(mod_mul(x.a, y.b, p_), mod_mul(x.b, y.a, p_), p_)};
}

Fq FieldFq::inv(Fq x) const {
  if (!ext_) return {mod_inv(x.a, p_), 0};
  const std::uint32_t norm = mod_add(mod_mul(x.a, x.a, p_), mod_mul(x.b, x.b, p_), p_);
  const std::uint32_t ni = mod_inv(norm, p_);
  return {mod_mul(x.a, ni, p_), mod_mul(mod_neg(x.b, p_), ni, p_)};
}

std::string FieldFq::describe() const {
  const std::string ps = std::to_string(p_);
  if (ext_) return "F_" + ps + "^2";
  return "F_" + ps + " (i = " + std::to_string(i_) + ")";
}

}  // namespace adehk

/// @file field.hpp
/// @brief Arithmetic in F_p and in F_p[i]/(i^2 + 1).
#pragma once

#include <cstdint>
#include <string>

namespace adehk {

bool is_prime(std::uint64_t n);

inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t mod_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);
/// Reduces a signed integer into 0..p-1.
std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p);

/// Square root of -1 in F_p, for p = 2 or p = 1 mod 4. Smallest representative.
std::uint32_t sqrt_minus_one(std::uint32_t p);

/// Element a + b*i. In split mode (p = 2 or p = 1 mod 4) b is always 0 and i has
/// been replaced by a square root of -1 in F_p.
struct Fq {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const Fq&, const Fq&) = default;
};

/// Either F_p (i realized inside F_p) or the quadratic extension F_{p^2}.
class FieldFq {
 public:
  explicit FieldFq(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  bool extension() const { return ext_; }

  Fq from_gauss(std::int64_t re, std::int64_t im) const;
  Fq add(Fq x, Fq y) const { return {mod_add(x.a, y.a, p_), mod_add(x.b, y.b, p_)}; }
  Fq sub(Fq x, Fq y) const { return {mod_sub(x.a, y.a, p_), mod_sub(x.b, y.b, p_)}; }
  Fq neg(Fq x) const { return {mod_neg(x.a, p_), mod_neg(x.b, p_)}; }
  Fq mul(Fq x, Fq y) const;
  Fq inv(Fq x) const;

  std::string describe() const;

 private:
  std::uint32_t p_;
  bool ext_;
  std::uint32_t i_;
};

}  // namespace adehk

/// @file rat.hpp
/// @brief Exact rationals in lowest terms, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace adehk {

using BigInt = mpz_class;

/// Parses a decimal integer with optional sign. Throws ParseError.
BigInt parse_bigint(std::string_view text);

/// Exact rational number. Always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);
  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

  /// Accepts "n", "-n", "n/d".
  static Rat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  BigInt floor() const;
  BigInt ceil() const;
  Rat abs() const;

  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned long exp);
Rat rpow(const Rat& base, long exp);

/// Checked conversion; throws std::overflow_error when out of range.
std::int64_t to_int64(const BigInt& v);

}  // namespace adehk

/// @file int_poly.hpp
/// @brief Sparse univariate Laurent polynomials with checked int64 coefficients.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adehk {

/// Sparse polynomial in t. Exponents may be negative (shifts by t^l, l < 0),
/// no zero coefficients are stored.
class IntPoly {
 public:
  using Terms = std::map<long, std::int64_t>;

  IntPoly() = default;
  explicit IntPoly(std::int64_t c) { add_term(0, c); }
  static IntPoly monomial(long exp, std::int64_t c = 1);
  /// 1 - t^w
  static IntPoly one_minus(long w);
  /// 1 + t^w + ... + t^{(k-1)w}
  static IntPoly geometric(long w, long k);

  /// Parses "t^16+t^21-2*t^3+5", "0", "t". Throws ParseError.
  static IntPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(long exp) const;
  /// Lowest/highest exponent; precondition: nonzero.
  long low_degree() const { return terms_.begin()->first; }
  long high_degree() const { return terms_.rbegin()->first; }

  void add_term(long exp, std::int64_t c);

  IntPoly shifted(long l) const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(std::int64_t c) const;

  /// this * (1 - t^w)
  IntPoly times_one_minus(long w) const;
  /// Quotient by (1 - t^w) when the division is exact.
  std::optional<IntPoly> divide_one_minus(long w) const;

  /// Sum of coefficients (value at t = 1).
  std::int64_t value_at_one() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace adehk

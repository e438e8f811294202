/// @file rational_series.hpp
/// @brief Hilbert series as numerator / prod (1 - t^w).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adehk/int_poly.hpp"

namespace adehk {

class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(IntPoly numerator, std::vector<long> denominator_weights);

  /// 1 / prod (1 - t^w)
  static RationalSeries free_algebra(std::vector<long> weights);

  /// Reads `t^16+t^21+t^25+t^30 ; [10,6]`. The bracket part may be omitted.
  static RationalSeries parse(std::string_view text);

  const IntPoly& numerator() const { return num_; }
  /// Sorted ascending.
  const std::vector<long>& denominator_weights() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalSeries shifted(long l) const;
  RationalSeries times(const IntPoly& f) const;
  RationalSeries scaled(std::int64_t c) const;

  /// Numerator rewritten over the given denominator multiset, which must
  /// contain this series' denominator.
  IntPoly numerator_over(const std::vector<long>& weights) const;

  /// Same text form as parse; weights printed largest first.
  std::string str() const;

  /// Exact equality of the rational functions.
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

 private:
  void canonicalize();

  IntPoly num_;
  std::vector<long> den_;
};

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);

/// r with r * (1 - t^w) = a.
RationalSeries series_divide_cyclotomic(const RationalSeries& a, long w);

/// l with a = t^l * b, if one exists.
std::optional<long> series_equal_up_to_shift(const RationalSeries& a, const RationalSeries& b);

/// Coefficients of t^0 .. t^n_max.
std::vector<std::int64_t> series_coefficients(const RationalSeries& a, long n_max);

/// Smallest multiset containing both.
/// The same series written over the given denominator weights, if its numerator
/// there is a polynomial.
std::optional<RationalSeries> reexpress_over(const RationalSeries& a, const std::vector<long>& weights);

std::vector<long> multiset_union(const std::vector<long>& a, const std::vector<long>& b);

}  // namespace adehk

// Seeded input generators shared by the property tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "adehk/rat.hpp"
#include "adehk/rational_series.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// num/den with 0 <= value <= max_value, den in 1..max_den.
  adehk::Rat rat(long max_value, long max_den) {
    const long den = uniform(1, max_den);
    return adehk::Rat(uniform(0, max_value * den), den);
  }

  /// Numerator with up to `terms` terms, exponents 0..max_exp, coefficients in [-5, 5].
  adehk::IntPoly int_poly(int terms, long max_exp) {
    adehk::IntPoly f;
    const int k = static_cast<int>(uniform(1, terms));
    for (int i = 0; i < k; ++i) f.add_term(uniform(0, max_exp), uniform(-5, 5));
    return f;
  }

  /// Nonzero series over 1-3 denominator factors drawn from `weights`.
  adehk::RationalSeries series(const std::vector<long>& weights) {
    for (;;) {
      std::vector<long> den;
      const int k = static_cast<int>(uniform(1, 3));
      for (int i = 0; i < k; ++i) den.push_back(weights[static_cast<std::size_t>(uniform(0, static_cast<long>(weights.size()) - 1))]);
      adehk::IntPoly num = int_poly(5, 30);
      if (!num.is_zero()) return adehk::RationalSeries(num, den);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen

/// @file groebner.hpp
/// @brief Buchberger's algorithm over F_p under weighted degree-revlex orders,
/// standard monomial counts.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adehk/poly.hpp"

namespace adehk {

/// Weighted degree first, ties broken reverse-lexicographically
/// (a > b iff the last nonzero entry of a - b is negative).
class WeightedOrder {
 public:
  WeightedOrder() = default;
  explicit WeightedOrder(std::vector<int> weights);

  const std::vector<int>& weights() const { return weights_; }
  int nvars() const { return static_cast<int>(weights_.size()); }
  long degree(Mono m) const { return mono::wdeg(m, weights_); }
  /// Monotone sort key: key(a) > key(b) iff a > b.
  std::uint64_t key(Mono m) const;
  bool greater(Mono a, Mono b) const { return key(a) > key(b); }

 private:
  std::vector<int> weights_;
};

struct GroebnerBasis {
  std::uint32_t p = 2;
  WeightedOrder order;
  /// Monic, inter-reduced, sorted by leading monomial ascending.
  std::vector<PolyFp> generators;

  std::vector<Mono> leading_monomials() const;
};

Mono leading_monomial(const PolyFp& f, const WeightedOrder& order);

/// Reduced Groebner basis. Throws std::invalid_argument if p is not prime or
/// generators disagree on p / variable count.
GroebnerBasis buchberger(const std::vector<PolyFp>& gens, const WeightedOrder& order);

/// Fully reduced remainder of f modulo the basis.
PolyFp normal_form(const PolyFp& f, const GroebnerBasis& gb);

/// Number of standard monomials; nullopt when the quotient is infinite.
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb);
/// Same count, from leading monomials alone.
std::optional<std::uint64_t> standard_monomial_count(const std::vector<Mono>& leading, int nvars);

/// Standard monomials per weighted degree 0..m_max.
std::vector<std::int64_t> graded_dimensions(const GroebnerBasis& gb, const WeightedOrder& order, long m_max);
std::vector<std::int64_t> graded_standard_counts(const std::vector<Mono>& leading, const WeightedOrder& order,
                                                 long m_max);

/// All monomials of weighted degree exactly m, in ascending order.
std::vector<Mono> monomials_of_degree(const WeightedOrder& order, long m);

}  // namespace adehk

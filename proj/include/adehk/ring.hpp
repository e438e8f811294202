/// @file ring.hpp
/// @brief The two-dimensional ADE hypersurfaces k[X,Y,Z]/(F).
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adehk/groebner.hpp"
#include "adehk/poly.hpp"

namespace adehk {

enum class Family { A, D, E6, E7, E8 };

/// A(n): X^{n+1} - YZ, weights (2, n+1, n+1), |G| = n+1.
/// D(n): X^2 + Y^{n+1} + YZ^2, weights (n+1, 2, n), |G| = 4n (type D_{n+2}).
/// E6: X^2 + Y^3 + Z^4 (6,4,3); E7: X^2 + Y^3 + YZ^3 (9,6,4); E8: X^2 + Y^3 + Z^5 (15,10,6).
struct AdeRingSpec {
  Family family = Family::E8;
  int n = 0;
  ZPoly F;
  std::vector<int> weights;
  long degF = 0;
  long group_order = 0;

  /// Selector form accepted by parse_ring_selector: E8, A:n=3, D:n=2.
  std::string selector() const;
  /// Dynkin name, e.g. D_4 for D:n=2.
  std::string dynkin_name() const;
  WeightedOrder order() const { return WeightedOrder(weights); }
  long weight_sum() const { return weights[0] + weights[1] + weights[2]; }
  long weight_product() const { return static_cast<long>(weights[0]) * weights[1] * weights[2]; }
  bool is_E() const { return family == Family::E6 || family == Family::E7 || family == Family::E8; }
};

/// Throws std::invalid_argument for n out of range (A needs n >= 1, D needs n >= 2).
AdeRingSpec make_ring(Family family, int n = 0);

/// E6 | E7 | E8 | A:n=<k> | D:n=<k>; also A<k> as shorthand for A:n=<k>.
/// Throws ParseError.
AdeRingSpec parse_ring_selector(std::string_view text);

}  // namespace adehk

/// @file han_delta.hpp
/// @brief Han's delta function on triples of rationals and its weighted variant tau.
#pragma once

#include <array>
#include <cstdint>

#include "adehk/rat.hpp"

namespace adehk {

using RatTriple = std::array<Rat, 3>;
using IntTriple = std::array<BigInt, 3>;

struct LatticePoint {
  IntTriple u;
  Rat dist;
};

/// Nearest point of {u in N^3 : u_1 + u_2 + u_3 odd} in the taxicab norm.
/// Ties go to the lexicographically smallest u. Entries of v must be >= 0.
LatticePoint odd_lattice_distance(const RatTriple& v);

struct DeltaQuery {
  std::uint32_t p = 2;
  RatTriple t;
};

struct DeltaResult {
  enum class Branch { Excess, Lattice, Zero };
  Rat value;
  Branch branch = Branch::Zero;
  /// Lattice branch only.
  long s = 0;
  IntTriple u;
  Rat dist;
  long s_min = 0;
  /// The search succeeded at its very first step.
  bool s_min_binds = false;
};

DeltaResult delta_detailed(const DeltaQuery& q);
Rat delta(const DeltaQuery& q);

struct TauQuery {
  std::uint32_t p = 2;
  long alpha = 1;
  long beta = 1;
  long a = 1;
  long b = 1;
  RatTriple t;
};

/// a*alpha * delta(t1, t2/a, t3/b). Throws std::invalid_argument unless a*alpha == b*beta.
Rat tau(const TauQuery& q);

}  // namespace adehk

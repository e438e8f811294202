/// @file series_engine.hpp
/// @brief Hilbert series of Syz_R(X^a, Y^b, Z^c) for R = k[X,Y,Z]/(X^d - F(Y,Z)).
///
/// Unit multiples of generators do not change syzygy modules, so the sign in
/// X^d = ±F is dropped throughout.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adehk/rational_series.hpp"
#include "adehk/ring.hpp"

namespace adehk {

struct HypersurfaceSpec {
  enum class Shape {
    Binomial,        ///< F = Y^a + Z^b
    YTimesBinomial,  ///< F = Y (Y^a + Z^b)
    Monomial,        ///< F = Y^a Z^b
  };

  long d = 1;
  long alpha = 1, beta = 1, gamma = 1;
  Shape shape = Shape::Binomial;
  long a = 1, b = 1;

  static HypersurfaceSpec from_ring(const AdeRingSpec& ring);

  long degF() const { return d * alpha; }
  /// Weighted degree of the binomial factor g = Y^a + Z^b (0 for Monomial).
  long deg_g() const;
};

/// Y^y Z^z g^k with g the binomial factor of the ring's F.
struct FactoredGen {
  long y = 0, z = 0, k = 0;
  bool is_unit() const { return y == 0 && z == 0 && k == 0; }
  friend bool operator==(const FactoredGen&, const FactoredGen&) = default;
};

struct Rewritten {
  std::vector<FactoredGen> gens;
  /// Total degree of the removed factors: Syz(original) = Syz(gens)(-shift).
  long shift = 0;
};

long factored_degree(const HypersurfaceSpec& ring, const FactoredGen& f);

/// Removes a factor common to all generators, then a factor common to all but
/// the last one when it is coprime to the last. Throws std::invalid_argument
/// when the second factor exists but coprimality fails.
Rewritten rewrite_common_factor(const HypersurfaceSpec& ring, std::vector<FactoredGen> gens);

/// The two generator degrees (m <= n) of Syz_{k[Y,Z]}(F^{q_pow}, Y^b, Z^c).
/// Throws InconsistencyError on a parity failure.
std::pair<long, long> base_split(const HypersurfaceSpec& ring, std::uint32_t p, long q_pow, long b, long c);

/// Multiplies by 1 + t^alpha + ... + t^{(d-1) alpha}.
RationalSeries lift_to_hypersurface(const RationalSeries& h_p, const HypersurfaceSpec& ring);

/// H_R = (1 - t^{d alpha}) / ((1 - t^alpha)(1 - t^beta)(1 - t^gamma)).
RationalSeries ring_series(const HypersurfaceSpec& ring);

/// Combines S(a - r) and S(a + d - r) into S(a), a = dq + r.
RationalSeries recursion_step(long a, const HypersurfaceSpec& ring, const RationalSeries& h_low,
                              const RationalSeries& h_high);

struct SyzygySpec {
  HypersurfaceSpec ring;
  long a = 1, b = 1, c = 1;
};

/// Series of Syz_R(X^a, Y^b, Z^c) in characteristic p.
RationalSeries syzygy_series(const SyzygySpec& spec, std::uint32_t p);

struct CatalogSeries {
  int index = 0;
  int rank = 0;
  RationalSeries series;
  std::vector<int> conjugates;
};

struct Classification {
  enum class Kind { Indecomposable, FreeSplit, Unknown };
  Kind kind = Kind::Unknown;
  int index = 0;
  long shift = 0;
  /// Declared conjugates sharing the same series.
  std::vector<int> also_matches;
  /// FreeSplit shifts, m <= n.
  long m = 0, n = 0;

  std::string str() const;
};

/// H = t^shift * H_{M_index}, or H = (t^m + t^n) H_R, or Unknown. Throws
/// InconsistencyError when two catalog entries match that are not declared conjugates.
Classification classify(const RationalSeries& h, const RationalSeries& h_ring, const std::vector<CatalogSeries>& catalog);

/// (m, n) with H = (t^m + t^n) H_R.
std::optional<std::pair<long, long>> free_split_shifts(const RationalSeries& h, const RationalSeries& h_ring);

/// True if H = t^l1 H_1 + t^l2 H_2 for rank-one entries (or R itself) H_1, H_2.
bool matches_sum_of_rank_one(const RationalSeries& h, const RationalSeries& h_ring,
                             const std::vector<CatalogSeries>& catalog);

}  // namespace adehk

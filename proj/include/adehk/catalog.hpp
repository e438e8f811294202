/// @file catalog.hpp
/// @brief Indecomposable MCM modules over the ADE rings, pull-back tables to
/// type A, and Frobenius pull-back classes of Syz(m).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adehk/poly.hpp"
#include "adehk/ring.hpp"
#include "adehk/series_engine.hpp"

namespace adehk {

/// M_index = Syz_R(generators). `i` in a generator is a fixed square root of -1.
struct McmModuleSpec {
  int index = 0;
  int rank = 0;
  std::vector<std::string> generators;
  int dual_index = 0;
  std::optional<int> determinant_index;
  /// Rank-one entries: the ideal the module is isomorphic to.
  std::optional<std::string> ideal_iso;
  /// Entries with the same Hilbert series (images under a sign change of X or Z).
  std::vector<int> conjugates;

  std::vector<GaussPoly> generator_polys() const;
  bool uses_i() const;
};

std::vector<McmModuleSpec> catalog(const AdeRingSpec& ring);

/// Closed Hilbert series of each catalog entry, fitted from the linear-algebra
/// oracle over F_p (F_{p^2} when i is needed and p = 3 mod 4). Cached per (ring, p).
/// Throws InconsistencyError on a fit failure.
const std::vector<CatalogSeries>& catalog_series(const AdeRingSpec& ring, std::uint32_t p);

/// Series of Syz_R(gens) for an MCM module of the given rank, fitted as above.
RationalSeries fit_mcm_series(const AdeRingSpec& ring, const std::vector<GaussPoly>& gens, int rank, std::uint32_t p);

enum class PullbackTarget {
  A1,       ///< A_1 (all D and E rings)
  A2nm1,    ///< A_{2n-1} (D only)
  Anm1,     ///< A_{n-1} (D only)
};

/// Row j lists the target modules of the pull-back of M_j; 0 is the structure
/// sheaf, row 0 is the structure sheaf itself.
struct PullbackTable {
  AdeRingSpec source;
  PullbackTarget target = PullbackTarget::A1;
  int target_n = 1;
  std::map<int, std::vector<int>> rows;

  std::string target_name() const { return "A_" + std::to_string(target_n); }
};

/// Throws std::invalid_argument when the target does not apply to the ring.
PullbackTable pullback_table(const AdeRingSpec& source, PullbackTarget target);
/// Resolves a target A_k for the ring. A_1 wins when several kinds coincide.
std::optional<PullbackTarget> pullback_target_for(const AdeRingSpec& source, int k);

/// Throws std::out_of_range for an unknown index.
const std::vector<int>& pullback(const PullbackTable& table, int index);

/// Rows whose length differs from rank(M_j) times the length of row 0.
std::vector<int> rank_consistency_violations(const PullbackTable& table);

struct FrobeniusClass {
  enum class Kind {
    Indecomposable,  ///< Syz(X^q, Y^q, Z^q) = M_index(-twist)
    FreeSplit,       ///< R(-m) + R(-n)
    Unindexed,       ///< Syz(representative)(-twist), no catalog entry
    DelegateA,       ///< type A: use the closed formula
  };
  Kind kind = Kind::DelegateA;
  int index = 0;
  long twist = 0;
  long m = 0, n = 0;
  std::vector<std::string> representative;

  std::string str() const;
};

/// Class of Syz_R(X^q, Y^q, Z^q), q = p^e.
FrobeniusClass frobenius_class(const AdeRingSpec& ring, std::uint32_t p, unsigned e);

}  // namespace adehk

/// @file matrix_factorization.hpp
/// @brief Matrix factorizations (phi, psi) of a hypersurface F: verification,
/// cokernel rank, and syzygy extraction from column-deleted psi.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adehk/poly.hpp"
#include "adehk/ring.hpp"

namespace adehk {

using PolyMatrix = std::vector<std::vector<ZPoly>>;

struct MatFac {
  PolyMatrix phi;
  PolyMatrix psi;
  ZPoly F;

  std::size_t size() const { return phi.size(); }
};

struct MfVerdict {
  bool valid = false;
  bool reduced = false;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
PolyMatrix scalar_identity(std::size_t n, const ZPoly& f);
/// 1-based column indices.
PolyMatrix select_columns(const PolyMatrix& a, const std::vector<int>& columns);
PolyMatrix block_sum(const PolyMatrix& a, const PolyMatrix& b);
std::string matrix_str(const PolyMatrix& a);

/// Laplace expansion; exact over Z.
ZPoly determinant(const PolyMatrix& a);

/// q with a = b q, if it exists over Z.
std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b);

/// Valid iff phi psi = psi phi = F E_n exactly; reduced iff no entry has a
/// constant term. Throws std::invalid_argument on a shape mismatch.
MfVerdict verify(const MatFac& mf);
/// Same check with coefficients reduced mod p.
MfVerdict verify_mod(const MatFac& mf, std::uint32_t p);

/// i with det(phi) = u F^i, u = ±1. Throws InconsistencyError otherwise.
int coker_rank(const MatFac& mf);

/// Nonzero homogeneous v with psi_J v = 0 mod F over F_p, of minimal degree,
/// first nonzero entry monic, coefficients lifted to (-p/2, p/2]. The default
/// bound is the largest row sum of entry degrees. Throws InconsistencyError
/// when nothing exists within the bound.
std::vector<ZPoly> kernel_vector(const PolyMatrix& psi_j, const ZPoly& F, const std::vector<int>& weights,
                                 std::uint32_t p, std::optional<long> degree_bound = std::nullopt);

/// True iff (F, all m x m minors of psi_J) has finite colength, m = #columns - 1.
bool column_choice_check(const PolyMatrix& psi_j, const ZPoly& F, const std::vector<int>& weights, std::uint32_t p);

/// `[[a, b], [c, d]]`; rows and entries separated by commas.
PolyMatrix parse_matrix(std::string_view text);
/// Two matrices, optionally written `phi = [...]` and `psi = [...]`.
MatFac parse_matfac(std::string_view text, const ZPoly& F);

MatFac example_e8_size4();
/// Equivalence (alpha, alpha) : (phi, psi) -> (phi^T, psi^T) for the example above.
PolyMatrix example_e8_alpha();

struct ShippedMf {
  std::string name;
  AdeRingSpec ring;
  int catalog_index = 0;
  int rank = 0;
  MatFac mf;
};

/// Reduced factorizations shipped with the catalog.
std::vector<ShippedMf> shipped_matrix_factorizations();

}  // namespace adehk

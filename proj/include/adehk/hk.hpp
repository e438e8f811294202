/// @file hk.hpp
/// @brief Hilbert-Kunz functions, multiplicities and F-signatures of the ADE rings.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adehk/catalog.hpp"
#include "adehk/rat.hpp"
#include "adehk/ring.hpp"

namespace adehk {

/// 2(ab + ac + bc) - a^2 - b^2 - c^2.
BigInt quadratic_Q(const BigInt& a, const BigInt& b, const BigInt& c);

/// Data on the standard-graded model k[U,V,W]/(phi(F)): the ideal
/// (U^alpha, V^beta, W^gamma), its q-th Frobenius power's syzygy class
/// Syz(U^a, V^b, W^c)(-n), and D = dim k[U,V,W]/(phi(F), U^a, V^b, W^c).
struct SyzygyFormulaInput {
  long d = 1;
  long alpha = 1, beta = 1, gamma = 1;
  BigInt q = 1;
  BigInt a = 1, b = 1, c = 1;
  BigInt D = 1;
};

/// At least one of a < alpha q, b < beta q, c < gamma q.
bool syzygy_formula_hypothesis(const SyzygyFormulaInput& in);

/// (d Q(alpha, beta, gamma) q^2 - d Q(a, b, c)) / 4 + D. The hypothesis is not
/// enforced. Throws InconsistencyError on a non-integral result.
Rat hk_syzygy_formula(const SyzygyFormulaInput& in);

/// (d Q(alpha, beta, gamma) q^2 + d |n - l|^2) / 4 for Syz = R(-n) + R(-l).
Rat hk_split_formula(long d, long alpha, long beta, long gamma, const BigInt& q, const BigInt& n, const BigInt& l);

/// Divides by the product of the weights.
Rat grading_change(const Rat& value_standard, const std::vector<int>& weights);

/// phi(F) with X -> U^{w_X}, Y -> V^{w_Y}, Z -> W^{w_Z}.
ZPoly standard_model(const AdeRingSpec& ring);

/// dim k[U,V,W]/(phi(F), U^a, V^b, W^c) over F_p. Uses abc when every
/// monomial of phi(F) lies in (U^a, V^b, W^c), the Groebner oracle otherwise.
BigInt standard_colength(const ZPoly& phi_F, long a, long b, long c, std::uint32_t p);

/// Kunz's formula for A_n and the closed forms for D and E. Throws
/// InconsistencyError if the evaluation is not an integer.
BigInt hk_closed_form(const AdeRingSpec& ring, std::uint32_t p, unsigned e);

/// 2 - 1/|G|.
Rat hk_multiplicity(const AdeRingSpec& ring);

/// HK(q) - e_HK q^2.
Rat hk_gamma(const AdeRingSpec& ring, std::uint32_t p, unsigned e);

/// 2 q^2 - HK(q). Throws std::invalid_argument for type A.
BigInt f_signature(const AdeRingSpec& ring, std::uint32_t p, unsigned e);

enum class HkRoute { ClosedForm, SyzygyFormula, SplitFormula };
std::string route_name(HkRoute r);
/// Throws ParseError.
HkRoute parse_route(const std::string& s);

struct FormulaRoute {
  HkRoute route = HkRoute::ClosedForm;
  Rat value;
  std::optional<SyzygyFormulaInput> input;
};

/// HK through the Frobenius class: the syzygy formula for a syzygy class, the
/// split formula for a free split, the closed form for type A.
FormulaRoute hk_via_frobenius_class(const AdeRingSpec& ring, std::uint32_t p, unsigned e);

/// dim k[X,Y,Z]/(F, X^q, Y^q, Z^q) over F_p by Buchberger.
BigInt hk_oracle(const AdeRingSpec& ring, std::uint32_t p, unsigned e);

/// HK_ORACLE_DEGREE_CAP, default 10^6 standard monomials.
std::uint64_t oracle_cap();

struct HkReport {
  std::string ring;
  std::uint32_t p = 2;
  unsigned e = 1;
  BigInt value = 0;
  HkRoute route = HkRoute::ClosedForm;
  std::optional<BigInt> oracle_value;
  /// "not requested", "verified", "mismatch" or "skipped".
  std::string oracle_status = "not requested";
  FrobeniusClass frobenius_class;

  bool ok() const { return oracle_status != "mismatch"; }
};

/// Evaluates HK by `route`; with `verify` the oracle runs unless the expected
/// size exceeds `cap`.
HkReport hk_report(const AdeRingSpec& ring, std::uint32_t p, unsigned e, bool verify, HkRoute route = HkRoute::ClosedForm,
                   std::uint64_t cap = oracle_cap());

}  // namespace adehk

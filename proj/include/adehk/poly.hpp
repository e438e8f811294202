/// @file poly.hpp
/// @brief Monomials in up to three variables and sparse multivariate polynomials
/// over Z, Z[i] and F_p.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adehk {

/// Packed exponent vector: 21-bit fields, bit 20 of each field is a guard bit.
using Mono = std::uint64_t;

namespace mono {

inline constexpr int kBits = 21;
inline constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kBits) - 1;
inline constexpr std::uint64_t kMaxExp = (std::uint64_t{1} << (kBits - 1)) - 1;
inline constexpr std::uint64_t kGuard = (std::uint64_t{1} << 20) | (std::uint64_t{1} << 41) | (std::uint64_t{1} << 62);

inline unsigned exp(Mono m, int var) { return static_cast<unsigned>((m >> (kBits * var)) & kFieldMask); }
Mono make(std::initializer_list<unsigned> exps);
Mono make(const std::vector<unsigned>& exps);
Mono single(int var, unsigned e);
Mono mul(Mono a, Mono b);
inline bool divides(Mono a, Mono b) { return (((b | kGuard) - a) & kGuard) == kGuard; }
/// b / a, precondition divides(a, b).
inline Mono quot(Mono b, Mono a) { return b - a; }
Mono lcm(Mono a, Mono b);
Mono gcd(Mono a, Mono b);
Mono pow(Mono a, unsigned k);
long wdeg(Mono m, const std::vector<int>& weights);
unsigned total_degree(Mono m);

}  // namespace mono

/// Variable names, in order. Default X, Y, Z.
struct VarSet {
  std::vector<std::string> names{"X", "Y", "Z"};
  int size() const { return static_cast<int>(names.size()); }
  static VarSet xyz() { return VarSet{}; }
  static VarSet yz() { return VarSet{{"Y", "Z"}}; }
  static VarSet uvw() { return VarSet{{"U", "V", "W"}}; }
};

std::string mono_str(Mono m, const VarSet& vars);

/// Polynomial with exact int64 coefficients (checked).
class ZPoly {
 public:
  using Terms = std::map<Mono, std::int64_t>;

  ZPoly() = default;
  explicit ZPoly(std::int64_t c);
  static ZPoly term(std::int64_t c, Mono m);
  static ZPoly var(int v, unsigned e = 1) { return term(1, mono::single(v, e)); }

  /// Grammar: terms `coef*X^a*Y^b*Z^c` joined by + / -. Throws ParseError.
  static ZPoly parse(std::string_view text, const VarSet& vars = VarSet::xyz());

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(Mono m) const;
  std::int64_t constant_term() const { return coeff(0); }
  void add_term(Mono m, std::int64_t c);

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly operator-() const;
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly pow(unsigned k) const;
  ZPoly scaled(std::int64_t c) const;
  ZPoly times_mono(Mono m) const;

  /// Weighted degree if homogeneous (zero polynomial: nullopt).
  std::optional<long> homogeneous_degree(const std::vector<int>& weights) const;
  /// Replaces each variable v by v^{scale[v]}.
  ZPoly scale_exponents(const std::vector<unsigned>& scale) const;
  /// Moves variable i to position map[i].
  ZPoly remap_vars(const std::vector<int>& map) const;

  friend bool operator==(const ZPoly&, const ZPoly&) = default;
  std::string str(const VarSet& vars = VarSet::xyz()) const;

 private:
  Terms terms_;
};

/// re + i*im with i^2 = -1.
struct GaussPoly {
  ZPoly re;
  ZPoly im;
  GaussPoly() = default;
  GaussPoly(ZPoly r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussPoly(ZPoly r, ZPoly i) : re(std::move(r)), im(std::move(i)) {}
  bool has_i() const { return !im.is_zero(); }
  /// ZPoly grammar plus an `i` factor on any term, e.g. "iX+Z^2", "Z-i*Y^2".
  static GaussPoly parse(std::string_view text, const VarSet& vars = VarSet::xyz());
  std::optional<long> homogeneous_degree(const std::vector<int>& weights) const;
  std::string str(const VarSet& vars = VarSet::xyz()) const;
};

/// Polynomial over F_p.
class PolyFp {
 public:
  using Terms = std::map<Mono, std::uint32_t>;

  PolyFp() = default;
  PolyFp(std::uint32_t p, int nvars) : p_(p), nvars_(nvars) {}
  PolyFp(const ZPoly& f, std::uint32_t p, int nvars);
  static PolyFp term(std::uint32_t p, int nvars, std::uint32_t c, Mono m);

  std::uint32_t p() const { return p_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Mono m, std::uint32_t c);

  PolyFp& operator+=(const PolyFp& o);
  PolyFp& operator-=(const PolyFp& o);
  friend PolyFp operator+(PolyFp a, const PolyFp& b) { return a += b; }
  friend PolyFp operator-(PolyFp a, const PolyFp& b) { return a -= b; }
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  PolyFp pow(unsigned k) const;
  PolyFp scaled(std::uint32_t c) const;

  std::optional<long> homogeneous_degree(const std::vector<int>& weights) const;

  friend bool operator==(const PolyFp&, const PolyFp&) = default;
  std::string str(const VarSet& vars) const;

 private:
  std::uint32_t p_ = 2;
  int nvars_ = 3;
  Terms terms_;
};

}  // namespace adehk

#include "adehk/hk.hpp"

#include <cstdlib>
#include <stdexcept>

#include "adehk/error.hpp"
#include "adehk/field.hpp"
#include "adehk/groebner.hpp"

namespace adehk {

BigInt quadratic_Q(const BigInt& a, const BigInt& b, const BigInt& c) {
  return BigInt(2 * (a * b + a * c + b * c) - a * a - b * b - c * c);
}

bool syzygy_formula_hypothesis(const SyzygyFormulaInput& in) {
  return in.a < in.alpha * in.q || in.b < in.beta * in.q || in.c < in.gamma * in.q;
}

Rat hk_syzygy_formula(const SyzygyFormulaInput& in) {
  const BigInt q_form = quadratic_Q(in.alpha, in.beta, in.gamma);
  const BigInt num = BigInt(in.d * q_form * in.q * in.q - in.d * quadratic_Q(in.a, in.b, in.c));
  Rat v = Rat(num, 4) + Rat(in.D);
  if (!v.is_integer()) throw InconsistencyError("syzygy formula evaluation is not an integer: " + v.str());
  return v;
}

Rat hk_split_formula(long d, long alpha, long beta, long gamma, const BigInt& q, const BigInt& n, const BigInt& l) {
  const BigInt gap = BigInt(n - l);
  return Rat(BigInt(d * quadratic_Q(alpha, beta, gamma) * q * q + d * gap * gap), 4);
}

Rat grading_change(const Rat& value_standard, const std::vector<int>& weights) {
  BigInt w = 1;
  for (int x : weights) w *= x;
  return value_standard / Rat(w);
}

ZPoly standard_model(const AdeRingSpec& ring) {
  std::vector<unsigned> s;
  for (int w : ring.weights) s.push_back(static_cast<unsigned>(w));
  return ring.F.scale_exponents(s);
}

BigInt standard_colength(const ZPoly& phi_F, long a, long b, long c, std::uint32_t p) {
  bool inside = true;
  for (auto [m, coef] : phi_F.terms())
    if (mono::exp(m, 0) < a && mono::exp(m, 1) < b && mono::exp(m, 2) < c) inside = false;
  if (inside) return BigInt(a) * b * c;
  std::vector<PolyFp> gens{PolyFp(phi_F, p, 3)};
  gens.push_back(PolyFp::term(p, 3, 1, mono::single(0, static_cast<unsigned>(a))));
  gens.push_back(PolyFp::term(p, 3, 1, mono::single(1, static_cast<unsigned>(b))));
  gens.push_back(PolyFp::term(p, 3, 1, mono::single(2, static_cast<unsigned>(c))));
  auto dim = quotient_dimension(buchberger(gens, WeightedOrder({1, 1, 1})));
  if (!dim) throw InconsistencyError("standard_colength: quotient is infinite");
  return BigInt(static_cast<unsigned long>(*dim));
}

namespace {

bool residue_in(const BigInt& q, long mod, std::initializer_list<long> set) {
  const long r = to_int64(BigInt(q % mod));
  for (long s : set)
    if (r == s || r == mod - s) return true;
  return false;
}

BigInt integral(const Rat& v, const std::string& what) {
  if (!v.is_integer()) throw InconsistencyError(what + " evaluates to the non-integer " + v.str());
  return v.num();
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

}  // namespace

BigInt hk_closed_form(const AdeRingSpec& ring, std::uint32_t p, unsigned e) {
  require_prime(p);
  const BigInt q = ipow(BigInt(p), e);
  const Rat q2 = Rat(BigInt(q * q));
  const bool positive = e >= 1;
  const BigInt two_q2 = BigInt(2 * q * q);
  switch (ring.family) {
    case Family::A: {
      const long n1 = ring.n + 1;
      const BigInt r = BigInt(q % n1);
      const Rat v = (Rat(2) - Rat(1, n1)) * q2 - Rat(r) + Rat(BigInt(r * r), BigInt(n1));
      return integral(v, "Kunz's formula");
    }
    case Family::D: {
      if (positive && p == 2) return two_q2;
      const long n4 = 4L * ring.n;
      const BigInt r = BigInt(q % (2L * ring.n));
      const Rat v = (Rat(2) - Rat(1, n4)) * q2 - Rat(BigInt(r + 1), BigInt(2)) + Rat(BigInt(r * r), BigInt(n4));
      return integral(v, "the D closed form");
    }
    case Family::E6:
      if (positive && (p == 2 || p == 3)) return two_q2;
      return integral(Rat(BigInt(47 * q * q - 23), BigInt(24)), "the E6 closed form");
    case Family::E7:
      if (positive && (p == 2 || p == 3)) return two_q2;
      return integral(Rat(BigInt(95 * q * q - (residue_in(q, 24, {5, 11}) ? 71 : 47)), BigInt(48)), "the E7 closed form");
    case Family::E8:
      if (positive && (p == 2 || p == 3 || p == 5)) return two_q2;
      return integral(Rat(BigInt(239 * q * q - (residue_in(q, 30, {7, 13}) ? 191 : 119)), BigInt(120)), "the E8 closed form");
  }
  return 0;
}

Rat hk_multiplicity(const AdeRingSpec& ring) { return Rat(2) - Rat(1, ring.group_order); }

Rat hk_gamma(const AdeRingSpec& ring, std::uint32_t p, unsigned e) {
  const BigInt q = ipow(BigInt(p), e);
  return Rat(hk_closed_form(ring, p, e)) - hk_multiplicity(ring) * Rat(BigInt(q * q));
}

BigInt f_signature(const AdeRingSpec& ring, std::uint32_t p, unsigned e) {
  if (ring.family == Family::A) throw std::invalid_argument("f_signature: the formula 2q^2 - HK applies to types D and E only");
  const BigInt q = ipow(BigInt(p), e);
  return BigInt(2 * q * q - hk_closed_form(ring, p, e));
}

std::string route_name(HkRoute r) {
  switch (r) {
    case HkRoute::ClosedForm: return "closed-form";
    case HkRoute::SyzygyFormula: return "syzygy-formula";
    case HkRoute::SplitFormula: return "split-formula";
  }
  return "";
}

HkRoute parse_route(const std::string& s) {
  if (s == "closed-form") return HkRoute::ClosedForm;
  if (s == "syzygy-formula") return HkRoute::SyzygyFormula;
  if (s == "split-formula") return HkRoute::SplitFormula;
  throw ParseError("unknown route '" + s + "' (closed-form, syzygy-formula, split-formula)");
}

FormulaRoute hk_via_frobenius_class(const AdeRingSpec& ring, std::uint32_t p, unsigned e) {
  require_prime(p);
  FormulaRoute out;
  const FrobeniusClass fc = frobenius_class(ring, p, e);
  const BigInt q = ipow(BigInt(p), e);
  const long d = ring.degF;
  const long wx = ring.weights[0], wy = ring.weights[1], wz = ring.weights[2];
  switch (fc.kind) {
    case FrobeniusClass::Kind::DelegateA:
      out.route = HkRoute::ClosedForm;
      out.value = Rat(hk_closed_form(ring, p, e));
      return out;
    case FrobeniusClass::Kind::FreeSplit:
      out.route = HkRoute::SplitFormula;
      out.value = grading_change(hk_split_formula(d, wx, wy, wz, q, fc.m, fc.n), ring.weights);
      return out;
    case FrobeniusClass::Kind::Indecomposable:
    case FrobeniusClass::Kind::Unindexed: break;
  }
  long ex[3] = {0, 0, 0};
  if (fc.representative.size() != 3) throw InconsistencyError("hk_via_frobenius_class: representative is not a three-generator syzygy");
  for (int v = 0; v < 3; ++v) {
    const ZPoly g = ZPoly::parse(fc.representative[static_cast<std::size_t>(v)]);
    if (g.terms().size() != 1) throw InconsistencyError("hk_via_frobenius_class: representative generator is not a monomial");
    const Mono m = g.terms().begin()->first;
    if (m != mono::single(v, mono::exp(m, v))) throw InconsistencyError("hk_via_frobenius_class: representative is not (X^a, Y^b, Z^c)");
    ex[v] = mono::exp(m, v);
  }
  SyzygyFormulaInput in;
  in.d = d;
  in.alpha = wx;
  in.beta = wy;
  in.gamma = wz;
  in.q = q;
  in.a = wx * ex[0];
  in.b = wy * ex[1];
  in.c = wz * ex[2];
  in.D = standard_colength(standard_model(ring), wx * ex[0], wy * ex[1], wz * ex[2], p);
  out.route = HkRoute::SyzygyFormula;
  out.value = grading_change(hk_syzygy_formula(in), ring.weights);
  out.input = in;
  return out;
}

BigInt hk_oracle(const AdeRingSpec& ring, std::uint32_t p, unsigned e) {
  require_prime(p);
  const BigInt qb = ipow(BigInt(p), e);
  if (qb > BigInt(static_cast<unsigned long>(mono::kMaxExp))) throw std::overflow_error("hk_oracle: p^e exceeds the exponent range");
  const auto q = static_cast<unsigned>(to_int64(qb));
  std::vector<PolyFp> gens{PolyFp(ring.F, p, 3)};
  for (int v = 0; v < 3; ++v) gens.push_back(PolyFp::term(p, 3, 1, mono::single(v, q)));
  auto dim = quotient_dimension(buchberger(gens, ring.order()));
  if (!dim) throw InconsistencyError("hk_oracle: quotient is infinite");
  return BigInt(static_cast<unsigned long>(*dim));
}

std::uint64_t oracle_cap() {
  const char* env = std::getenv("HK_ORACLE_DEGREE_CAP");
  if (!env || !*env) return 1000000;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw ParseError(std::string("HK_ORACLE_DEGREE_CAP is not a non-negative integer: '") + env + "'");
  }
}

HkReport hk_report(const AdeRingSpec& ring, std::uint32_t p, unsigned e, bool verify, HkRoute route, std::uint64_t cap) {
  HkReport r;
  r.ring = ring.selector();
  r.p = p;
  r.e = e;
  r.frobenius_class = frobenius_class(ring, p, e);
  const BigInt closed = hk_closed_form(ring, p, e);
  if (route == HkRoute::ClosedForm) {
    r.value = closed;
    r.route = HkRoute::ClosedForm;
  } else {
    FormulaRoute lr = hk_via_frobenius_class(ring, p, e);
    if (!lr.value.is_integer()) throw InconsistencyError("HK by " + route_name(lr.route) + " is not an integer: " + lr.value.str());
    r.value = lr.value.num();
    r.route = lr.route;
  }
  if (verify) {
    // The quotient has exactly HK standard monomials.
    if (closed > BigInt(static_cast<unsigned long>(cap))) {
      r.oracle_status = "skipped";
    } else {
      r.oracle_value = hk_oracle(ring, p, e);
      r.oracle_status = *r.oracle_value == r.value ? "verified" : "mismatch";
    }
  }
  return r;
}

}  // namespace adehk

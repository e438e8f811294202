#include "adehk/ring.hpp"

#include <cctype>
#include <stdexcept>

#include "adehk/error.hpp"

namespace adehk {

AdeRingSpec make_ring(Family family, int n) {
  AdeRingSpec r;
  r.family = family;
  r.n = n;
  switch (family) {
    case Family::A:
      if (n < 1) throw std::invalid_argument("A(n) needs n >= 1");
      r.F = ZPoly::var(0, static_cast<unsigned>(n + 1)) - ZPoly::var(1) * ZPoly::var(2);
      r.weights = {2, n + 1, n + 1};
      r.group_order = n + 1;
      break;
    case Family::D:
      if (n < 2) throw std::invalid_argument("D(n) needs n >= 2");
      r.F = ZPoly::var(0, 2) + ZPoly::var(1, static_cast<unsigned>(n + 1)) + ZPoly::var(1) * ZPoly::var(2, 2);
      r.weights = {n + 1, 2, n};
      r.group_order = 4L * n;
      break;
    case Family::E6:
      r.F = ZPoly::parse("X^2+Y^3+Z^4");
      r.weights = {6, 4, 3};
      r.group_order = 24;
      break;
    case Family::E7:
      r.F = ZPoly::parse("X^2+Y^3+Y*Z^3");
      r.weights = {9, 6, 4};
      r.group_order = 48;
      break;
    case Family::E8:
      r.F = ZPoly::parse("X^2+Y^3+Z^5");
      r.weights = {15, 10, 6};
      r.group_order = 120;
      break;
  }
  auto d = r.F.homogeneous_degree(r.weights);
  if (!d) throw std::logic_error("ring " + r.selector() + ": F is not weighted homogeneous");
  r.degF = *d;
  return r;
}

std::string AdeRingSpec::selector() const {
  switch (family) {
    case Family::A: return "A:n=" + std::to_string(n);
    case Family::D: return "D:n=" + std::to_string(n);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::string AdeRingSpec::dynkin_name() const {
  switch (family) {
    case Family::A: return "A_" + std::to_string(n);
    case Family::D: return "D_" + std::to_string(n + 2);
    default: return selector();
  }
}

AdeRingSpec parse_ring_selector(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "E6") return make_ring(Family::E6);
  if (s == "E7") return make_ring(Family::E7);
  if (s == "E8") return make_ring(Family::E8);
  auto bad = [&] { throw ParseError("unknown ring selector '" + std::string(text) + "' (use E6, E7, E8, A:n=<k>, D:n=<k>)"); };
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D')) bad();
  std::string num;
  if (s.rfind("A:N=", 0) == 0 || s.rfind("D:N=", 0) == 0) num = s.substr(4);
  else if (s[0] == 'A') num = s.substr(1);
  else bad();
  if (num.empty() || num.size() > 6) bad();
  for (char ch : num)
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad();
  const int n = std::stoi(num);
  try {
    return make_ring(s[0] == 'A' ? Family::A : Family::D, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace adehk

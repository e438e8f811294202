#include "adehk/rational_series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "adehk/error.hpp"

namespace adehk {

std::vector<long> multiset_union(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> sa = a, sb = b, out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

namespace {

std::vector<long> multiset_minus(const std::vector<long>& big, const std::vector<long>& small) {
  std::vector<long> out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RationalSeries::RationalSeries(IntPoly numerator, std::vector<long> denominator_weights)
    : num_(std::move(numerator)), den_(std::move(denominator_weights)) {
  for (long w : den_)
    if (w <= 0) throw std::invalid_argument("denominator weights must be positive");
  std::sort(den_.begin(), den_.end());
  canonicalize();
}

RationalSeries RationalSeries::free_algebra(std::vector<long> weights) {
  return RationalSeries(IntPoly(1), std::move(weights));
}

void RationalSeries::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    // Largest factors first.
    for (std::size_t k = den_.size(); k-- > 0;) {
      if (k + 1 < den_.size() && den_[k] == den_[k + 1]) continue;
      if (auto q = num_.divide_one_minus(den_[k])) {
        num_ = std::move(*q);
        den_.erase(den_.begin() + static_cast<long>(k));
        progress = true;
        break;
      }
    }
  }
}

IntPoly RationalSeries::numerator_over(const std::vector<long>& weights) const {
  std::vector<long> w = weights;
  std::sort(w.begin(), w.end());
  if (!std::includes(w.begin(), w.end(), den_.begin(), den_.end()))
    throw std::invalid_argument("numerator_over: target denominator does not contain the series denominator");
  IntPoly n = num_;
  for (long extra : multiset_minus(w, den_)) n = n.times_one_minus(extra);
  return n;
}

RationalSeries RationalSeries::shifted(long l) const {
  RationalSeries r = *this;
  r.num_ = num_.shifted(l);
  return r;
}

RationalSeries RationalSeries::times(const IntPoly& f) const { return RationalSeries(num_ * f, den_); }

RationalSeries RationalSeries::scaled(std::int64_t c) const { return RationalSeries(num_.scaled(c), den_); }

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  const auto lcd = multiset_union(a.den_, b.den_);
  return a.numerator_over(lcd) == b.numerator_over(lcd);
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  const auto lcd = multiset_union(a.denominator_weights(), b.denominator_weights());
  return RationalSeries(a.numerator_over(lcd) + b.numerator_over(lcd), lcd);
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
  return series_add(a, b.scaled(-1));
}

RationalSeries series_divide_cyclotomic(const RationalSeries& a, long w) {
  std::vector<long> den = a.denominator_weights();
  den.push_back(w);
  return RationalSeries(a.numerator(), std::move(den));
}

std::optional<RationalSeries> reexpress_over(const RationalSeries& a, const std::vector<long>& weights) {
  IntPoly n = a.numerator();
  for (long w : weights) n = n.times_one_minus(w);
  for (long w : a.denominator_weights()) {
    auto q = n.divide_one_minus(w);
    if (!q) return std::nullopt;
    n = std::move(*q);
  }
  return RationalSeries(std::move(n), weights);
}

std::optional<long> series_equal_up_to_shift(const RationalSeries& a, const RationalSeries& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return 0L;
    return std::nullopt;
  }
  const auto lcd = multiset_union(a.denominator_weights(), b.denominator_weights());
  const IntPoly na = a.numerator_over(lcd);
  const IntPoly nb = b.numerator_over(lcd);
  const long l = na.low_degree() - nb.low_degree();
  if (nb.shifted(l) == na) return l;
  return std::nullopt;
}

std::vector<std::int64_t> series_coefficients(const RationalSeries& a, long n_max) {
  if (n_max < 0) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
  for (auto [e, v] : a.numerator().terms()) {
    if (e < 0) throw std::domain_error("series_coefficients: numerator has negative exponents");
    if (e <= n_max) c[static_cast<std::size_t>(e)] = v;
  }
  for (long w : a.denominator_weights())
    for (long k = w; k <= n_max; ++k)
      c[static_cast<std::size_t>(k)] = checked_add(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k - w)]);
  return c;
}

std::string RationalSeries::str() const {
  std::string out = num_.str() + " ; [";
  for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
    if (it != den_.rbegin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "]";
}

RationalSeries RationalSeries::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) return RationalSeries(IntPoly::parse(text), {});
  IntPoly num = IntPoly::parse(text.substr(0, semi));
  std::string rest;
  for (char ch : text.substr(semi + 1))
    if (!std::isspace(static_cast<unsigned char>(ch))) rest += ch;
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw ParseError("expected [w1,w2,...] after ';' in '" + std::string(text) + "'");
  rest = rest.substr(1, rest.size() - 2);
  std::vector<long> den;
  std::size_t start = 0;
  while (!rest.empty() && start <= rest.size()) {
    auto comma = rest.find(',', start);
    std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw ParseError("bad denominator weight '" + tok + "'");
    long w = std::stol(tok);
    if (w <= 0) throw ParseError("denominator weight must be positive");
    den.push_back(w);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RationalSeries(std::move(num), std::move(den));
}

}  // namespace adehk

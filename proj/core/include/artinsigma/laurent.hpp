#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artinsigma/errors.hpp"
#include "artinsigma/field.hpp"

namespace artinsigma {

/// Element of F[t, t^-1]: sum of coeffs[i] * t^(offset + i).
///
/// Normalized: the first and last stored coefficients are nonzero; zero is
/// the empty coefficient list with offset 0. Units are exactly c * t^k.
template <class F>
class LaurentPoly {
 public:
  using Field = F;
  using Element = typename F::Element;

  explicit LaurentPoly(F field = F{}) : field_(std::move(field)) {}
  LaurentPoly(F field, std::int64_t offset, std::vector<Element> coeffs)
      : field_(std::move(field)), offset_(offset), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static LaurentPoly monomial(const F& field, Element c, std::int64_t exponent) {
    return LaurentPoly(field, exponent, {std::move(c)});
  }
  static LaurentPoly constant(const F& field, long long c) { return monomial(field, field.from_int(c), 0); }
  static LaurentPoly t_power(const F& field, std::int64_t k) { return monomial(field, field.one(), k); }

  const F& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const { return coeffs_.size() == 1; }
  std::int64_t offset() const { return offset_; }
  std::int64_t top_exponent() const { return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Euclidean norm on F[t^{±1}]: top minus lowest exponent (0 for units).
  std::size_t span() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  Element coeff(std::int64_t exponent) const {
    auto i = exponent - offset_;
    if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Element& leading() const { return coeffs_.back(); }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) c = field_.neg(c);
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field_);
    const F& f = a.field_;
    std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (f.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return LaurentPoly(f, a.offset_ + b.offset_, std::move(out));
  }

  LaurentPoly scaled(const Element& c) const {
    std::vector<Element> out = coeffs_;
    for (auto& x : out) x = field_.mul(x, c);
    return LaurentPoly(field_, offset_, std::move(out));
  }
  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.offset_ += k;
    return out;
  }

  /// Associate with offset 0 and leading coefficient 1 (zero stays zero).
  LaurentPoly canonical() const {
    if (is_zero()) return *this;
    return LaurentPoly(field_, 0, coeffs_).scaled(field_.inv(leading()));
  }

  /// a = q * b + r with span(r) < span(b) or r = 0. b must be nonzero.
  friend std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ConsistencyError("Laurent division by zero");
    const F& f = a.field_;
    if (a.is_zero()) return {LaurentPoly(f), LaurentPoly(f)};
    // Work with ordinary polynomials a' = a t^-off(a), b' = b t^-off(b).
    std::vector<Element> rem = a.coeffs_;
    const std::vector<Element>& div = b.coeffs_;
    const Element lead_inv = f.inv(div.back());
    std::vector<Element> quot(rem.size() >= div.size() ? rem.size() - div.size() + 1 : 0, f.zero());
    for (std::size_t k = quot.size(); k-- > 0;) {
      Element c = f.mul(rem[k + div.size() - 1], lead_inv);
      quot[k] = c;
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] = f.sub(rem[k + j], f.mul(c, div[j]));
    }
    // a = (q' t^{off a - off b}) b + r' t^{off a}
    LaurentPoly q(f, a.offset_ - b.offset_, std::move(quot));
    LaurentPoly r(f, a.offset_, std::move(rem));
    return {std::move(q), std::move(r)};
  }

  bool divides(const LaurentPoly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
  }

  /// Canonical gcd; gcd(0, 0) = 0.
  friend LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.canonical();
  }

  /// Value at t = x (x must be nonzero when negative exponents occur).
  Element evaluate(const Element& x) const {
    const F& f = field_;
    if (is_zero()) return f.zero();
    Element acc = f.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
    // acc = sum c_i x^i; multiply by x^offset.
    Element base = offset_ < 0 ? f.inv(x) : x;
    for (std::int64_t k = offset_ < 0 ? -offset_ : offset_; k > 0; --k) acc = f.mul(acc, base);
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (field_.is_zero(coeffs_[i])) continue;
      std::int64_t e = offset_ + static_cast<std::int64_t>(i);
      std::string c = field_.to_string(coeffs_[i]);
      bool one = coeffs_[i] == field_.one();
      std::string term;
      if (e == 0) {
        term = c;
      } else {
        std::string mono = e == 1 ? "t" : "t^" + std::to_string(e);
        term = one ? mono : c + "*" + mono;
      }
      out += out.empty() ? term : " + " + term;
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && field_.is_zero(coeffs_[lo])) ++lo;
    if (lo == coeffs_.size()) {
      coeffs_.clear();
      offset_ = 0;
      return;
    }
    std::size_t hi = coeffs_.size();
    while (field_.is_zero(coeffs_[hi - 1])) --hi;
    coeffs_ = std::vector<Element>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(hi));
    offset_ += static_cast<std::int64_t>(lo);
  }

  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    const F& f = a.field_;
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    std::int64_t lo = std::min(a.offset_, b.offset_);
    std::int64_t hi = std::max(a.top_exponent(), b.top_exponent());
    std::vector<Element> out(static_cast<std::size_t>(hi - lo + 1), f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[static_cast<std::size_t>(a.offset_ - lo) + i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(b.offset_ - lo) + i];
      slot = subtract ? f.sub(slot, b.coeffs_[i]) : f.add(slot, b.coeffs_[i]);
    }
    return LaurentPoly(f, lo, std::move(out));
  }

  F field_;
  std::int64_t offset_ = 0;
  std::vector<Element> coeffs_;
};

/// q_k(t^m) = 1 + t^m + ... + t^{m(k-1)}; the constant k when m = 0.
template <class F>
LaurentPoly<F> q_poly(int k, std::int64_t m, const F& field) {
  if (k < 1) throw InputError("q_poly: k must be positive");
  LaurentPoly<F> out(field);
  for (int j = 0; j < k; ++j) out = out + LaurentPoly<F>::t_power(field, m * j);
  return out;
}

}  // namespace artinsigma

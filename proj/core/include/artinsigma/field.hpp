#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artinsigma/errors.hpp"
#include "artinsigma/rational.hpp"

namespace artinsigma {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n > 0, increasing, by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Field of rationals with arbitrary-precision numerator and denominator.
class RationalField {
 public:
  using Element = Rational;

  unsigned characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(const Integer& k) const { return Element(k); }
  Element from_int(long long k) const { return Element(k); }

  bool is_zero(const Element& a) const { return a == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (a == 0) throw ConsistencyError("division by zero in Q");
    return Element(1) / a;
  }
  std::string to_string(const Element& a) const {
    return denominator(a) == 1 ? numerator(a).str() : rational_string(a);
  }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Prime field Z/p with p < 2^31.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  unsigned characteristic() const { return static_cast<unsigned>(p_); }
  std::string name() const { return "F" + std::to_string(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const Integer& k) const;
  Element from_int(long long k) const {
    long long r = k % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long long>(p_) : r);
  }

  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  std::string to_string(Element a) const { return std::to_string(a); }
  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  std::uint64_t p_;
};

/// Coefficient ring for simplicial homology.
struct Coefficients {
  enum class Kind { Integers, Rationals, PrimeField };
  Kind kind = Kind::Integers;
  std::uint64_t p = 0;

  static Coefficients integers() { return {Kind::Integers, 0}; }
  static Coefficients rationals() { return {Kind::Rationals, 0}; }
  /// p = 0 gives Q; otherwise p must be prime.
  static Coefficients field(std::uint64_t p);

  bool is_field() const { return kind != Kind::Integers; }
  std::string name() const;
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// Throws InputError unless p == 0 or p is prime.
void require_prime_or_zero(std::uint64_t p);

/// Calls fn(RationalField{}) when p == 0 and fn(PrimeField{p}) otherwise.
template <class Fn>
decltype(auto) with_field(std::uint64_t p, Fn&& fn) {
  if (p == 0) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{p});
}

}  // namespace artinsigma

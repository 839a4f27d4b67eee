#include "artinsigma/field.hpp"

#include <cctype>
#include <limits>

namespace artinsigma {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = Integer(std::string(s.substr(i)));
  if (s[0] == '-') out = -out;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    auto rest = text.substr(slash + 1);
    ok = !rest.empty() && rest[0] != '-' && rest[0] != '+' && parse_integer(rest, den);
  }
  if (!ok) throw InputError("not a rational number: '" + std::string(text) + "'");
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string rational_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw InputError(std::to_string(p) + " is not a supported prime");
  }
}

PrimeField::Element PrimeField::from_integer(const Integer& k) const {
  Integer r = k % Integer(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw ConsistencyError("division by zero in " + name());
  // Fermat: a^(p-2)
  Element result = 1;
  Element base = a;
  std::uint64_t e = p_ - 2;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coefficients Coefficients::field(std::uint64_t p) {
  require_prime_or_zero(p);
  return p == 0 ? rationals() : Coefficients{Kind::PrimeField, p};
}

std::string Coefficients::name() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p);
  }
  return "?";
}

void require_prime_or_zero(std::uint64_t p) {
  if (p != 0 && !is_prime(p)) {
    throw InputError(std::to_string(p) + " is neither 0 nor a prime");
  }
}

}  // namespace artinsigma

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dhermite {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number backed by arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : value_(v) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    // Boost rejects some negative denominators (e.g. 0/-7), so move the sign first.
    value_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q" with q > 0, always including the denominator.
  std::string to_fraction_string() const {
    return numerator().str() + "/" + denominator().str();
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    return is_integer() ? numerator().str() : to_fraction_string();
  }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text) {
    auto parse_int = [](std::string_view t) {
      if (t.empty()) throw std::invalid_argument("Rational::parse: empty integer");
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) throw std::invalid_argument("Rational::parse: missing digits");
      for (std::size_t k = i; k < t.size(); ++k) {
        if (t[k] < '0' || t[k] > '9') {
          throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(t) + "'");
        }
      }
      BigInt v(std::string(t.substr(t[0] == '+' ? 1 : 0)));
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    return Rational(num, den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  Backend value_{0};
};

inline Rational factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return Rational(b);
}

/// n!/(n-k)!, the falling factorial n(n-1)...(n-k+1).
inline Rational falling_factorial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  BigInt f = 1;
  for (unsigned i = 0; i < k; ++i) f *= n - i;
  return Rational(f);
}

/// Integer power of a rational, negative exponents allowed for nonzero bases.
inline Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational r(1), b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

}  // namespace dhermite

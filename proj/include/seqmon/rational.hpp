// ============================================================================
// seqmon/rational.hpp — Exact rational time values
// ============================================================================
//
// Dense-time endpoints and timing bounds are open-interval boundaries, so
// exactness is semantically visible: a boundary off by any epsilon flips
// strict comparisons.  Time values are therefore kept as normalized int64
// fractions; comparisons and ring operations widen to 128 bits internally.
//
// Values that come from the surface syntax are decimal, so denominators are
// always of the form 2^x * 5^y and to_string() can render an exact decimal.
// ============================================================================

#ifndef SEQMON_RATIONAL_HPP
#define SEQMON_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seqmon {

class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  /// Parses a nonnegative decimal literal ("7", "2.5", "0.125").
  static Rational from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty literal");
    std::int64_t ipart = 0;
    std::size_t i = 0;
    bool any_digit = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      if (ipart > (INT64_MAX - 9) / 10) throw std::invalid_argument("Rational: literal too large");
      ipart = ipart * 10 + (text[i] - '0');
      any_digit = true;
    }
    std::int64_t fpart = 0;
    std::int64_t fden = 1;
    if (i < text.size() && text[i] == '.') {
      ++i;
      for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        if (fden > INT64_MAX / 10) throw std::invalid_argument("Rational: too many fraction digits");
        fpart = fpart * 10 + (text[i] - '0');
        fden *= 10;
        any_digit = true;
      }
    }
    if (!any_digit || i != text.size())
      throw std::invalid_argument("Rational: malformed decimal literal '" + text + "'");
    return Rational(ipart) + Rational(fpart, fden);
  }

  /// Exact decimal rendering when the denominator is 2^x * 5^y (always the
  /// case for values derived from decimal input); "num/den" otherwise.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    std::int64_t twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    const std::int64_t digits = twos > fives ? twos : fives;
    __int128 scaled = num_;
    for (std::int64_t k = 0; k < digits; ++k) scaled *= 10;
    scaled /= den_;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string body;
    for (std::int64_t k = 0; k < digits || scaled != 0 || body.empty(); ++k) {
      body.push_back(static_cast<char>('0' + static_cast<int>(scaled % 10)));
      scaled /= 10;
      if (k + 1 == digits) body.push_back('.');
    }
    if (body.back() == '.') body.push_back('0');
    std::string out(body.rbegin(), body.rend());
    // strip trailing zeros of the fraction, but keep at least one digit
    auto dot = out.find('.');
    auto last = out.find_last_not_of('0');
    if (last > dot) out.erase(last + 1);
    if (out.back() == '.') out.pop_back();
    return neg ? "-" + out : out;
  }

  /// this * factor, which must be an exact integer (factor a multiple of den).
  std::int64_t scaled_integer(std::int64_t factor) const {
    __int128 v = static_cast<__int128>(num_) * factor;
    if (v % den_ != 0) throw std::logic_error("Rational: inexact integer scaling");
    v /= den_;
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: scaled value overflows");
    return static_cast<std::int64_t>(v);
  }

 private:
  static Rational make(__int128 num, __int128 den) {
    if (den < 0) { den = -den; num = -num; }
    __int128 a = num < 0 ? -num : num;
    __int128 g = gcd128(a, den);
    if (g > 1) { num /= g; den /= g; }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("Rational: value out of range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) { den_ = -den_; num_ = -num_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_;
  std::int64_t den_;  // > 0
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace seqmon

#endif  // SEQMON_RATIONAL_HPP

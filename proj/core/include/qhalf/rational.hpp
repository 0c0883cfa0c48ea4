#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace qhalf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive
/// denominator. Zero is canonically 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: integers embed
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
  /// malformed text and std::domain_error on a zero denominator.
  static Rational parse(const std::string& text);

  /// Serializes as "p/q", denominator always present ("5" prints "5/1").
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Shorthand used throughout the tests.
inline Rational rat(long long p, long long q = 1) { return Rational(BigInt(p), BigInt(q)); }

/// Open interval over the rationals. An absent bound is infinite.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  Interval() = default;  // the whole line
  Interval(Rational lo, Rational hi);  // throws std::invalid_argument unless lo < hi
  Interval(std::optional<Rational> lo, std::optional<Rational> hi);

  static Interval whole_line() { return Interval(); }
  static Interval above(Rational lo) { return Interval(std::optional<Rational>(std::move(lo)), std::nullopt); }
  static Interval below(Rational hi) { return Interval(std::nullopt, std::optional<Rational>(std::move(hi))); }

  bool bounded() const { return lower.has_value() && upper.has_value(); }

  /// Strict interior membership.
  bool contains(const Rational& q) const {
    if (lower && !(q > *lower)) return false;
    if (upper && !(q < *upper)) return false;
    return true;
  }
};

/// Intersection of two open intervals; std::nullopt when empty.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& i);

}  // namespace qhalf

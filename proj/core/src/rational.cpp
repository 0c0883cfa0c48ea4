#include "qhalf/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qhalf {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body.erase(body.begin());
  }
  if (!all_digits(body)) throw std::invalid_argument("Rational: malformed integer '" + s + "'");
  BigInt v(body);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    Rational r;
    r.num_ = parse_integer(text);
    r.den_ = 1;
    return r;
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (num.empty() || den.empty() || den.find('/') != std::string::npos) {
    throw std::invalid_argument("Rational: malformed fraction '" + text + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Interval::Interval(Rational lo, Rational hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (!(*lower < *upper)) throw std::invalid_argument("Interval: requires lower < upper");
}

Interval::Interval(std::optional<Rational> lo, std::optional<Rational> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower && upper && !(*lower < *upper)) {
    throw std::invalid_argument("Interval: requires lower < upper");
  }
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  std::optional<Rational> lo = a.lower;
  if (b.lower && (!lo || *b.lower > *lo)) lo = b.lower;
  std::optional<Rational> hi = a.upper;
  if (b.upper && (!hi || *b.upper < *hi)) hi = b.upper;
  if (lo && hi && !(*lo < *hi)) return std::nullopt;
  return Interval(std::move(lo), std::move(hi));
}

std::ostream& operator<<(std::ostream& os, const Interval& i) {
  os << "(" << (i.lower ? i.lower->str() : "-inf") << ", "
     << (i.upper ? i.upper->str() : "+inf") << ")";
  return os;
}

}  // namespace qhalf

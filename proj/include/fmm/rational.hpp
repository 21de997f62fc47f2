#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fmm {

/// Exact rational scalar. Always normalized: denominator > 0 and
/// gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(Integer num, Integer den);

  /// Parses "-?digits(/digits)?"; anything else is a ParseError.
  static Rational parse(const std::string& text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_minus_one() const { return num_ == -1 && den_ == 1; }
  bool is_unit() const { return is_one() || is_minus_one(); }

  /// Canonical rendering: "n" when integral, "n/d" otherwise.
  std::string str() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

}  // namespace fmm

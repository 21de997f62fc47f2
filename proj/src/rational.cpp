#include "fmm/rational.hpp"

#include <cctype>
#include <utility>

#include "fmm/errors.hpp"

namespace fmm {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw ParameterError("rational denominator must be nonzero");
  }
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  // Grammar: optional '-', digits, optional '/digits'.
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto take_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return text.substr(start, pos - start);
  };
  std::string num_digits = take_digits();
  if (num_digits.empty()) {
    throw ParseError("invalid rational \"" + text + "\": expected digits");
  }
  Integer num(num_digits);
  Integer den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den_digits = take_digits();
    if (den_digits.empty()) {
      throw ParseError("invalid rational \"" + text + "\": expected digits after '/'");
    }
    den = Integer(den_digits);
    if (den == 0) {
      throw ParseError("invalid rational \"" + text + "\": zero denominator");
    }
  }
  if (pos != text.size()) {
    throw ParseError("invalid rational \"" + text + "\": trailing characters");
  }
  if (negative) {
    num = -num;
  }
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += "/";
    out += den_.str();
  }
  return out;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) {
    throw ParameterError("rational division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

}  // namespace fmm

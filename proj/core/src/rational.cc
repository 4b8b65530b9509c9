// Copyright 2026 The bernsched Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bernsched/rational.h"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace bernsched {
namespace {

BigInt ParseDigits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("rational: missing digits in '" +
                                std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("rational: bad character in '" +
                                  std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

BigInt PowerOfTen(long exponent) {
  BigInt result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Rational ParseDecimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    exponent = ParseDigits(exp_text, text).convert_to<long>();
    if (negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view frac = mantissa.substr(dot + 1);
    digits = std::string(mantissa.substr(0, dot)) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = std::string(mantissa);
  }
  BigInt value = ParseDigits(digits, text);
  if (exponent >= 0) return Rational(value * PowerOfTen(exponent), 1);
  return Rational(value, PowerOfTen(-exponent));
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value < 0) throw std::domain_error("rational: negative value");
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("rational: zero denominator");
  Normalize();
}

void Rational::Normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ < 0) throw std::domain_error("rational: negative value");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::FromDouble(double value) {
  if (!std::isfinite(value) || value < 0) {
    throw std::domain_error("rational: cannot represent double exactly");
  }
  if (value == 0) return Rational();
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // Scale the mantissa to a 53-bit integer.
  auto bits = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num = bits;
  BigInt den = 1;
  if (exponent > 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return Rational(std::move(num), std::move(den));
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (!text.empty() && text.front() == '-') {
    throw std::domain_error("rational: negative value '" + std::string(text) +
                            "'");
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseDigits(text.substr(0, slash), text);
    BigInt den = ParseDigits(text.substr(slash + 1), text);
    return Rational(std::move(num), std::move(den));
  }
  return ParseDecimal(text);
}

double Rational::ToDouble() const {
  if (den_ == 1) return num_.convert_to<double>();
  boost::multiprecision::cpp_rational exact(num_, den_);
  return exact.convert_to<double>();
}

std::string Rational::ToString() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  Normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  if (den_ == other.den_) {
    num_ -= other.num_;
  } else {
    num_ = num_ * other.den_ - other.num_ * den_;
    den_ *= other.den_;
  }
  if (num_ < 0) throw std::domain_error("rational: negative difference");
  Normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  Normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("rational: division by zero");
  num_ *= other.den_;
  den_ *= other.num_;
  Normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    if (a.num_ < b.num_) return std::strong_ordering::less;
    if (a.num_ > b.num_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Rational::Hash() const {
  std::size_t h = boost::multiprecision::hash_value(num_);
  h ^= boost::multiprecision::hash_value(den_) + 0x9e3779b97f4a7c15ULL +
       (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

BigInt FloorDiv(const Rational& a, const Rational& b) {
  if (b.IsZero()) throw std::domain_error("rational: division by zero");
  // a/b = (an * bd) / (ad * bn), both nonnegative.
  return (a.numerator() * b.denominator()) /
         (a.denominator() * b.numerator());
}

Rational CeilToMultipleOf(const Rational& a, const Rational& grid) {
  if (grid.IsZero()) throw std::domain_error("rational: zero grid");
  BigInt n = a.numerator() * grid.denominator();
  BigInt d = a.denominator() * grid.numerator();
  BigInt k = n / d;
  if (k * d != n) k += 1;
  return Rational(k, 1) * grid;
}

bool IsMultipleOf(const Rational& a, const Rational& grid) {
  if (grid.IsZero()) throw std::domain_error("rational: zero grid");
  BigInt n = a.numerator() * grid.denominator();
  BigInt d = a.denominator() * grid.numerator();
  return n % d == 0;
}

Rational Pow(const Rational& a, int exponent) {
  if (exponent < 0) throw std::domain_error("rational: negative exponent");
  Rational result(1);
  for (int i = 0; i < exponent; ++i) result *= a;
  return result;
}

}  // namespace bernsched

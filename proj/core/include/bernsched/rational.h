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

#ifndef BERNSCHED_RATIONAL_H_
#define BERNSCHED_RATIONAL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bernsched {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative fraction. Every time quantity (sizes, grid points, load
// profile entries) is a Rational so that grid membership and profile equality
// are decided exactly. Always kept in lowest terms with a positive
// denominator; operations whose exact result would be negative throw
// std::domain_error.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  // Implicit on purpose: integer literals are the common way to write sizes.
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);

  // Exact binary value of a finite, nonnegative double.
  static Rational FromDouble(double value);

  // Accepts "num/den", an integer, or a plain decimal such as "0.125" or
  // "1e-3". Decimals are converted exactly (0.1 is 1/10, not the double).
  static Rational Parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool IsZero() const { return num_ == 0; }
  bool IsInteger() const { return den_ == 1; }

  double ToDouble() const;
  // "num/den", or "num" when the denominator is 1.
  std::string ToString() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  std::size_t Hash() const;

 private:
  void Normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

// floor(a / b); b must be positive.
BigInt FloorDiv(const Rational& a, const Rational& b);

// Smallest multiple of `grid` that is >= a; grid must be positive.
Rational CeilToMultipleOf(const Rational& a, const Rational& grid);

// True iff a = k * grid for some integer k >= 0.
bool IsMultipleOf(const Rational& a, const Rational& grid);

// a^exponent for exponent >= 0.
Rational Pow(const Rational& a, int exponent);

struct RationalHash {
  std::size_t operator()(const Rational& value) const { return value.Hash(); }
};

}  // namespace bernsched

#endif  // BERNSCHED_RATIONAL_H_

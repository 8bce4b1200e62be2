// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace ctower {

using Rational = mpq_class;

enum class Backend { Rational, Float };

std::string_view to_string(Backend backend) noexcept;

// Absolute tolerance used whenever a float value takes part in a comparison
// that is exact in the rational backend.
inline constexpr double kFloatTolerance = 1e-12;

/// A real number held either as an exact rational or as a 64-bit float.
///
/// Arithmetic between two exact values stays exact; as soon as one operand is
/// a float the result is a float. Equality and ordering compare numerically.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}                 // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}                // NOLINT
  Scalar(long long v);                                   // NOLINT
  Scalar(unsigned long v);                               // NOLINT
  Scalar(unsigned v) : Scalar(static_cast<unsigned long>(v)) {}  // NOLINT
  Scalar(Rational v);                                    // NOLINT
  Scalar(long long num, long long den);

  static Scalar real(double v);

  // "p/q", "-p/q", integers and plain decimals ("0.125", "-3", "1e-3") are
  // parsed exactly. Anything else throws Error(Parse).
  static Scalar parse(std::string_view text);

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  Backend backend() const noexcept { return is_exact() ? Backend::Rational : Backend::Float; }
  const Rational& rational() const;  // throws Error(NotExact) on floats
  double to_double() const noexcept;
  bool is_integer() const noexcept;
  bool is_zero() const noexcept;
  int sign() const noexcept;

  Scalar as(Backend backend) const;

  // "p/q" (or "p") when exact, 12 significant digits when float.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  struct RealTag {};
  Scalar(double v, RealTag) : value_(v) {}
  std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar abs(const Scalar& s);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

// Exact when `base` is exact and `exponent` is an exact integer; otherwise
// evaluated with std::pow.
Scalar pow(const Scalar& base, const Scalar& exponent);
Scalar pow(const Scalar& base, long exponent);

Scalar exp(const Scalar& s);
Scalar log(const Scalar& s);

// Exact equality when both sides are rational, |a-b| <= tol otherwise.
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kFloatTolerance);
// a < b, requiring a margin of `tol` when either side is a float.
bool definitely_less(const Scalar& a, const Scalar& b, double tol = kFloatTolerance);

Rational binomial(unsigned n, unsigned k);

}  // namespace ctower

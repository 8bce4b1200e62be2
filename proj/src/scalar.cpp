// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/scalar.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <optional>
#include <ostream>

#include "ctower/error.hpp"

namespace ctower {

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::Rational ? "rational" : "float";
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ForeignSubset: return "ForeignSubset";
    case ErrorCode::ForeignPoint: return "ForeignPoint";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::Normalization: return "Normalization";
    case ErrorCode::Monotonicity: return "Monotonicity";
    case ErrorCode::Endpoint: return "Endpoint";
    case ErrorCode::NonMonotoneDistortion: return "NonMonotoneDistortion";
    case ErrorCode::MapOutOfRange: return "MapOutOfRange";
    case ErrorCode::NotComonotonic: return "NotComonotonic";
    case ErrorCode::EmptyCapacityList: return "EmptyCapacityList";
    case ErrorCode::DuplicateCapacity: return "DuplicateCapacity";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidTransform: return "InvalidTransform";
    case ErrorCode::InvalidUtility: return "InvalidUtility";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::Linkage: return "Linkage";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::LayerMismatch: return "LayerMismatch";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::OffGrid: return "OffGrid";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotExact: return "NotExact";
  }
  return "Unknown";
}

namespace {

Rational from_long_long(long long v) {
  // gmpxx has no long long constructor; go through the decimal text.
  return Rational(std::to_string(v));
}

// get_d truncates toward zero; pick the nearer of it and its outward
// neighbour, ties to even.
double rational_to_double(const Rational& q) {
  const double t = q.get_d();
  if (!std::isfinite(t)) return t;
  const double away = std::nextafter(t, q < 0 ? -HUGE_VAL : HUGE_VAL);
  if (!std::isfinite(away)) return t;
  const Rational dt = abs(q - Rational(t));
  const Rational da = abs(Rational(away) - q);
  if (dt < da) return t;
  if (da < dt) return away;
  std::int64_t bits = 0;
  std::memcpy(&bits, &t, sizeof bits);
  return (bits & 1) == 0 ? t : away;
}

void require_finite(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "non-finite float value");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Parses [sign]digits[.digits][e[sign]digits] exactly.
std::optional<Rational> parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) return std::nullopt;
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) return std::nullopt;
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational result = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

}  // namespace

Scalar::Scalar(long long v) : value_(from_long_long(v)) {}
Scalar::Scalar(unsigned long v) : value_(Rational(v)) {}
Scalar::Scalar(Rational v) : value_(std::move(v)) {
  std::get<Rational>(value_).canonicalize();
}
Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  value_ = std::move(q);
}

Scalar Scalar::real(double v) {
  require_finite(v);
  return Scalar(v, RealTag{});
}

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    std::string n(num_digits);
    mpz_class nz(n, 10);
    if (!num.empty() && num.front() == '-') nz = -nz;
    return Scalar(Rational(nz, d));
  }
  if (auto q = parse_decimal(text)) return Scalar(std::move(*q));
  throw Error(ErrorCode::Parse, "malformed number '" + std::string(text) + "'");
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw Error(ErrorCode::NotExact, "value is a float");
  return std::get<Rational>(value_);
}

double Scalar::to_double() const noexcept {
  if (is_exact()) return rational_to_double(std::get<Rational>(value_));
  return std::get<double>(value_);
}

bool Scalar::is_integer() const noexcept {
  if (is_exact()) return std::get<Rational>(value_).get_den() == 1;
  double v = std::get<double>(value_);
  return std::floor(v) == v;
}

bool Scalar::is_zero() const noexcept { return sign() == 0; }

int Scalar::sign() const noexcept {
  if (is_exact()) return sgn(std::get<Rational>(value_));
  double v = std::get<double>(value_);
  return (v > 0) - (v < 0);
}

Scalar Scalar::as(Backend backend) const {
  if (backend == Backend::Float && is_exact()) return Scalar::real(to_double());
  return *this;
}

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<Rational>(value_).get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(value_));
  return buf;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar(-std::get<double>(value_), RealTag{});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
  } else {
    value_ = to_double() + rhs.to_double();
    require_finite(std::get<double>(value_));
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
  } else {
    value_ = to_double() - rhs.to_double();
    require_finite(std::get<double>(value_));
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
  } else {
    value_ = to_double() * rhs.to_double();
    require_finite(std::get<double>(value_));
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) /= std::get<Rational>(rhs.value_);
  } else {
    value_ = to_double() / rhs.to_double();
    require_finite(std::get<double>(value_));
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(std::get<Rational>(a.value_), std::get<Rational>(b.value_));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar pow(const Scalar& base, long exponent) {
  if (!base.is_exact()) return Scalar::real(std::pow(base.to_double(), static_cast<double>(exponent)));
  const Rational& q = base.rational();
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  if (exponent < 0) {
    if (num == 0) throw Error(ErrorCode::InvalidArgument, "zero to a negative power");
    std::swap(num, den);
  }
  return Scalar(Rational(num, den));
}

Scalar pow(const Scalar& base, const Scalar& exponent) {
  if (base.is_exact() && exponent.is_exact() && exponent.is_integer()) {
    const Rational& e = exponent.rational();
    if (!e.get_num().fits_slong_p()) throw Error(ErrorCode::Overflow, "exponent too large");
    return pow(base, e.get_num().get_si());
  }
  double b = base.to_double();
  double e = exponent.to_double();
  if (b == 0.0 && e > 0) return Scalar::real(0.0);
  return Scalar::real(std::pow(b, e));
}

Scalar exp(const Scalar& s) {
  double v = std::exp(s.to_double());
  if (!std::isfinite(v)) throw Error(ErrorCode::Overflow, "exp overflow");
  return Scalar::real(v);
}

Scalar log(const Scalar& s) {
  if (s.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "log of a non-positive value");
  return Scalar::real(std::log(s.to_double()));
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= tol;
}

bool definitely_less(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a < b;
  return a.to_double() < b.to_double() - tol;
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace ctower

#pragma once

#include <complex>
#include <string>

#include "gwp/rational.hpp"

namespace gwp {

/// Coefficient of an operator: either an exact complex rational (the
/// default) or a double-precision complex number.
///
/// Mixed arithmetic promotes to numeric. Real values are the common case;
/// the imaginary part is kept but never inspected on the hot path unless
/// it is nonzero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar numeric(double re, double im = 0.0);
  static Scalar numeric(std::complex<double> z) { return numeric(z.real(), z.imag()); }

  bool is_exact() const noexcept { return !numeric_; }
  bool is_zero() const noexcept;
  bool is_real() const noexcept;

  /// Exact real part. Throws DomainError for numeric scalars.
  const Rational& exact_real() const;
  const Rational& exact_imag() const;

  double real() const;
  double imag() const;
  std::complex<double> to_complex() const { return {real(), imag()}; }

  Scalar conj() const;

  /// "3/2", "-1/3+2i", or "%.17g" rendering for numeric values.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact comparison when both sides are exact, bitwise-double otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void promote();

  bool numeric_ = false;
  Rational re_;
  Rational im_;
  std::complex<double> z_;
};

std::string format_double(double value);

}  // namespace gwp

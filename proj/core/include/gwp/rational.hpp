#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gwp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always normalized (reduced, positive denominator).
///
/// Values whose numerator and denominator fit in 63 bits are stored inline and
/// use 128-bit intermediates; anything larger is promoted to an arbitrary
/// precision representation and demoted again as soon as it fits.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const BigInt& n, const BigInt& d = 1);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "-7", "3/4" or a plain decimal such as "0.125" / "2.5e-3".
  /// Decimals are converted exactly.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const noexcept;
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const;
  bool is_small() const noexcept { return !big_; }

  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Big = boost::multiprecision::cpp_rational;

  Big to_big() const;
  void assign_big(Big value);
  void assign_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace gwp

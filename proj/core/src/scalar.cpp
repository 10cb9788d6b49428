#include "gwp/scalar.hpp"

#include <cstdio>

#include "gwp/error.hpp"

namespace gwp {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Scalar Scalar::numeric(double re, double im) {
  Scalar s;
  s.numeric_ = true;
  s.z_ = {re, im};
  return s;
}

bool Scalar::is_zero() const noexcept {
  if (numeric_) return z_ == std::complex<double>{};
  return re_.is_zero() && im_.is_zero();
}

bool Scalar::is_real() const noexcept {
  return numeric_ ? z_.imag() == 0.0 : im_.is_zero();
}

const Rational& Scalar::exact_real() const {
  if (numeric_) throw DomainError("exact value requested from a numeric scalar");
  return re_;
}

const Rational& Scalar::exact_imag() const {
  if (numeric_) throw DomainError("exact value requested from a numeric scalar");
  return im_;
}

double Scalar::real() const { return numeric_ ? z_.real() : re_.to_double(); }

double Scalar::imag() const { return numeric_ ? z_.imag() : im_.to_double(); }

Scalar Scalar::conj() const {
  Scalar out(*this);
  if (numeric_) {
    out.z_ = std::conj(z_);
  } else if (!im_.is_zero()) {
    out.im_ = -im_;
  }
  return out;
}

std::string Scalar::str() const {
  if (numeric_) {
    if (z_.imag() == 0.0) return format_double(z_.real());
    std::string im = format_double(z_.imag());
    if (im.front() != '-') im = "+" + im;
    return format_double(z_.real()) + im + "i";
  }
  if (im_.is_zero()) return re_.str();
  std::string im = im_.str();
  if (im.front() != '-') im = "+" + im;
  return re_.str() + im + "i";
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (numeric_) {
    out.z_ = -z_;
  } else {
    out.re_ = -re_;
    if (!im_.is_zero()) out.im_ = -im_;
  }
  return out;
}

void Scalar::promote() {
  if (numeric_) return;
  z_ = {re_.to_double(), im_.to_double()};
  re_ = Rational();
  im_ = Rational();
  numeric_ = true;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (!numeric_ && !rhs.numeric_) {
    re_ += rhs.re_;
    if (!rhs.im_.is_zero()) im_ += rhs.im_;
    return *this;
  }
  promote();
  z_ += rhs.to_complex();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!numeric_ && !rhs.numeric_) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
      re_ *= rhs.re_;
      return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  promote();
  z_ *= rhs.to_complex();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero scalar");
  if (!numeric_ && !rhs.numeric_) {
    if (rhs.im_.is_zero()) {
      re_ /= rhs.re_;
      if (!im_.is_zero()) im_ /= rhs.re_;
      return *this;
    }
    Rational norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
    Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  promote();
  z_ /= rhs.to_complex();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.numeric_ && !b.numeric_) return a.re_ == b.re_ && a.im_ == b.im_;
  return a.to_complex() == b.to_complex();
}

}  // namespace gwp

#include "gwp/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "gwp/error.hpp"

namespace gwp {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 magnitude(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

BigInt to_bigint(i128 v) {
  u128 m = magnitude(v);
  BigInt out = BigInt(static_cast<std::uint64_t>(m >> 64));
  out <<= 64;
  out += BigInt(static_cast<std::uint64_t>(m));
  return v < 0 ? BigInt(-out) : out;
}

bool fits_small(const BigInt& v) {
  return v <= kSmallMax && v >= -kSmallMax;
}

}  // namespace

Rational::Rational(std::int64_t n) noexcept : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    big_ = std::make_unique<Big>(n);
  }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  assign_wide(i128(n), i128(d));
}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  assign_big(Big(n, d));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<Big>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<Big>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("invalid rational literal '" + std::string(text) + "'", 0);
  };
  if (text.empty()) return fail();

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  std::string_view whole = digits(i);
  if (whole.empty()) return fail();
  BigInt num{std::string(whole)};
  BigInt den = 1;

  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string_view d = digits(i);
    if (d.empty() || i != text.size()) return fail();
    den = BigInt(std::string(d));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  } else {
    if (i < text.size() && text[i] == '.') {
      ++i;
      std::string_view frac = digits(i);
      if (frac.empty()) return fail();
      for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
      ++i;
      bool neg_exp = false;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg_exp = text[i] == '-';
        ++i;
      }
      std::string_view e = digits(i);
      if (e.empty() || e.size() > 4) return fail();
      unsigned exp = static_cast<unsigned>(std::stoul(std::string(e)));
      BigInt scale = boost::multiprecision::pow(BigInt(10), exp);
      if (neg_exp) {
        den *= scale;
      } else {
        num *= scale;
      }
    }
    if (i != text.size()) return fail();
  }
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

int Rational::sign() const noexcept {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

double Rational::to_double() const {
  if (big_) return big_->convert_to<double>();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) {
    std::string out = boost::multiprecision::numerator(*big_).str();
    if (boost::multiprecision::denominator(*big_) != 1) {
      out += "/" + boost::multiprecision::denominator(*big_).str();
    }
    return out;
  }
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    *out.big_ = -*out.big_;
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == rhs.den_) {
      assign_wide(i128(num_) + rhs.num_, den_);
    } else {
      assign_wide(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
    }
  } else {
    assign_big(to_big() + rhs.to_big());
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    assign_wide(i128(num_) * rhs.num_, i128(den_) * rhs.den_);
  } else {
    assign_big(to_big() * rhs.to_big());
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero rational");
  if (!big_ && !rhs.big_) {
    assign_wide(i128(num_) * rhs.den_, i128(den_) * rhs.num_);
  } else {
    assign_big(to_big() / rhs.to_big());
  }
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_big() == b.to_big();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  auto l = a.to_big();
  auto r = b.to_big();
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  return Big(num_, den_);
}

void Rational::assign_big(Big value) {
  BigInt n = boost::multiprecision::numerator(value);
  BigInt d = boost::multiprecision::denominator(value);
  if (fits_small(n) && fits_small(d)) {
    num_ = n.convert_to<std::int64_t>();
    den_ = d.convert_to<std::int64_t>();
    big_.reset();
  } else {
    big_ = std::make_unique<Big>(std::move(value));
  }
}

void Rational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(magnitude(num), u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  if (magnitude(num) <= u128(kSmallMax) && u128(den) <= u128(kSmallMax)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    big_ = std::make_unique<Big>(to_bigint(num), to_bigint(den));
  }
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace gwp

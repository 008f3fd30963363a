#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace evograph {

using int128 = __int128;

// Exact rational arithmetic on 64-bit numerator/denominator.
//
// The dynamics branch on utility ties, so every comparison must be decided
// exactly; floating point is never used.  Intermediate products are computed
// in 128 bits and results that do not fit back into 64 bits throw
// std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rational operator-(const Rational& r) { return Rational(Reduced{}, -r.num_, r.den_); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    const std::int64_t g = std::gcd(x.den_, y.den_);
    const int128 num = int128(x.num_) * (y.den_ / g) + int128(y.num_) * (x.den_ / g);
    const int128 den = int128(x.den_ / g) * y.den_;
    return make_reduced(num, den);
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

  friend Rational operator*(const Rational& x, const Rational& y) {
    const std::int64_t g1 = std::gcd(abs64(x.num_), y.den_);
    const std::int64_t g2 = std::gcd(abs64(y.num_), x.den_);
    const int128 num = int128(x.num_ / g1) * (y.num_ / g2);
    const int128 den = int128(x.den_ / g2) * (y.den_ / g1);
    return make_reduced(num, den);
  }

  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    const auto flip = y.num_ > 0 ? Rational(Reduced{}, y.den_, y.num_)
                                 : Rational(Reduced{}, -y.den_, -y.num_);
    return x * flip;
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int128 lhs = int128(x.num_) * y.den_;
    const int128 rhs = int128(y.num_) * x.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

  // Accepts integers ("3", "-7"), fractions ("22/25", "-1/2") and plain
  // decimal strings ("0.88", "-1.5").  Scientific notation is rejected so
  // that every accepted literal converts exactly.
  static Rational parse(std::string_view text);

  // "22/25", "-1/2", "3"
  std::string to_string() const;

  // Decimal form when the denominator is of the form 2^a 5^b ("0.88"),
  // otherwise the fraction form.
  std::string to_decimal_string() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  struct Reduced {};
  constexpr Rational(Reduced, std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  static std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

  static int128 abs128(int128 v) { return v < 0 ? -v : v; }

  static int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      const int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make_reduced(int128 num, int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) den = 1;
    const int128 g = gcd128(num == 0 ? 1 : num, den);
    num /= g;
    den /= g;
    constexpr int128 lo = -int128(1) << 63;
    constexpr int128 hi = (int128(1) << 63) - 1;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
    return Rational(Reduced{}, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  }

  void normalize() {
    if (den_ < 0) {
      if (num_ == std::int64_t{-9223372036854775807LL - 1} ||
          den_ == std::int64_t{-9223372036854775807LL - 1})
        throw std::overflow_error("rational overflow");
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(abs64(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  const auto fail = [&](const char* why) {
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  const auto digits = [&](std::int64_t& out, int* count = nullptr) {
    int n = 0;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      const int d = text[pos] - '0';
      if (out > (INT64_MAX - d) / 10) fail("too large");
      out = out * 10 + d;
      ++pos;
      ++n;
    }
    if (count) *count = n;
    return n;
  };
  std::int64_t whole = 0;
  if (digits(whole) == 0) fail("expected digits");
  Rational result(whole);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::int64_t den = 0;
    if (digits(den) == 0) fail("expected denominator");
    if (den == 0) fail("zero denominator");
    if (pos != text.size()) fail("trailing characters");
    result = Rational(whole, den);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t frac = 0;
    int places = 0;
    if (digits(frac, &places) == 0) fail("expected digits after '.'");
    if (pos != text.size()) fail("trailing characters (exponents are not supported)");
    if (places > 18) fail("too many decimal places");
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) {
      if (scale > INT64_MAX / 10) fail("too large");
      scale *= 10;
    }
    if (whole > (INT64_MAX - frac) / scale) fail("too large");
    result = Rational(whole * scale + frac, scale);
  } else if (pos != text.size()) {
    fail("trailing characters");
  }
  return negative ? -result : result;
}

inline std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

inline std::string Rational::to_decimal_string() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return to_string();
  const int places = twos > fives ? twos : fives;
  int128 scaled = num_;
  for (int i = twos; i < places; ++i) scaled *= 2;
  for (int i = fives; i < places; ++i) scaled *= 5;
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits;
  if (scaled == 0) digits = "0";
  while (scaled > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + int(scaled % 10)));
    scaled /= 10;
  }
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
  digits.insert(digits.end() - places, '.');
  return (neg ? "-" : "") + digits;
}

}  // namespace evograph

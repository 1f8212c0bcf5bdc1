#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mvf/errors.hpp"

namespace mvf {

// Exact rational arithmetic on 64-bit numerator/denominator. Values are kept
// reduced with a positive denominator, so operator== is structural equality.
// Intermediates go through 128-bit integers; anything that does not fit back
// into 64 bits after reduction throws.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : num_(n) {}  // NOLINT: integers embed implicitly
  Rat(long long n, long long d) {
    if (d == 0) throw BadParameter("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  // Accepts "a" or "a/b" with an optional leading minus, nothing else.
  static Rat parse(std::string_view text) {
    auto fail = [&] { throw ParseError("bad rational literal: '" + std::string(text) + "'"); };
    long long n = 0;
    long long d = 1;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto r1 = std::from_chars(begin, end, n);
    if (r1.ec != std::errc()) fail();
    if (r1.ptr != end) {
      if (*r1.ptr != '/') fail();
      auto r2 = std::from_chars(r1.ptr + 1, end, d);
      if (r2.ec != std::errc() || r2.ptr != end || d <= 0) fail();
    }
    return Rat(n, d);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  Rat operator+(const Rat& o) const {
    return from128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rat operator-(const Rat& o) const {
    return from128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rat operator*(const Rat& o) const {
    return from128(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw BadParameter("rational division by zero");
    return from128(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const Rat& o) const = default;
  std::strong_ordering operator<=>(const Rat& o) const {
    i128 l = i128(num_) * o.den_;
    i128 r = i128(o.num_) * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using i128 = __int128;

  static Rat from128(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("rational arithmetic overflow");
    Rat r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace mvf

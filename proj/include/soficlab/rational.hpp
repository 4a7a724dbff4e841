#ifndef SOFICLAB_RATIONAL_HPP
#define SOFICLAB_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "soficlab/errors.hpp"

namespace soficlab {

// Exact rational with 64-bit numerator/denominator. Intermediates run in
// 128-bit and are reduced before narrowing; a result that does not fit after
// reduction throws RationalOverflow. All normalized Hamming quantities,
// measures and densities in this library are carried as Rational so that
// every inequality can be decided without tolerance.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    return from_i128(n, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    return from_i128(n, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("Rational: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // k-th power, k >= 0.
  Rational pow(int k) const {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "3", "-3/4" or a plain decimal like "0.05" (parsed exactly as 5/100).
  static Rational parse(const std::string& s);

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static __int128 i128(long long v) { return static_cast<__int128>(v); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw Error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = std::numeric_limits<long long>::max();
    constexpr __int128 kMin = std::numeric_limits<long long>::min();
    if (n > kMax || n < kMin || d > kMax)
      throw RationalOverflow("Rational: result exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  void assign(long long n, long long d) {
    Rational r = from_i128(i128(n), i128(d));
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("Rational: empty string");
  size_t slash = s.find('/');
  auto to_ll = [&](const std::string& t) -> long long {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw ParseError("Rational: bad integer '" + t + "'");
    }
    if (pos != t.size()) throw ParseError("Rational: bad integer '" + t + "'");
    return v;
  };
  if (slash != std::string::npos) {
    return Rational(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
  }
  size_t dot = s.find('.');
  if (dot == std::string::npos) return Rational(to_ll(s));
  std::string head = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (frac.empty()) throw ParseError("Rational: bad decimal '" + s + "'");
  bool neg = !head.empty() && head[0] == '-';
  long long ip = head.empty() || head == "-" ? 0 : to_ll(head);
  long long fp = to_ll(frac);
  if (fp < 0) throw ParseError("Rational: bad decimal '" + s + "'");
  long long scale = 1;
  for (size_t i = 0; i < frac.size(); ++i) {
    if (scale > std::numeric_limits<long long>::max() / 10)
      throw RationalOverflow("Rational: decimal too long");
    scale *= 10;
  }
  Rational fractional(fp, scale);
  Rational whole(ip < 0 ? -ip : ip);
  Rational mag = (ip < 0 ? -whole : whole).abs() + fractional;
  return neg || ip < 0 ? -mag : mag;
}

// n^k with overflow detection against `cap` (throws Overflow when exceeded).
inline long long checked_pow(long long n, int k, long long cap) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && r > cap / n)
      throw Overflow("size " + std::to_string(n) + "^" + std::to_string(k) +
                     " exceeds cap " + std::to_string(cap));
    r *= n;
  }
  return r;
}

}  // namespace soficlab

#endif

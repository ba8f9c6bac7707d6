#ifndef CATALAN_RATIONAL_HPP
#define CATALAN_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace catalan {

// Exact rational scalar on 64-bit numerator/denominator, always stored
// reduced with positive denominator.  Intermediates run through 128-bit
// arithmetic; a result that does not fit 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(Rational const& a, Rational const& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(Rational const& a, Rational const& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(Rational const& a, Rational const& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(Rational const& a, Rational const& b) {
    if (b.num_ == 0) {
      throw std::domain_error("Rational: division by zero");
    }
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(Rational const& o) { return *this = *this + o; }
  Rational& operator-=(Rational const& o) { return *this = *this - o; }
  Rational& operator*=(Rational const& o) { return *this = *this * o; }
  Rational& operator/=(Rational const& o) { return *this = *this / o; }

  friend bool operator==(Rational const& a, Rational const& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(Rational const& a, Rational const& b) {
    return !(a == b);
  }
  friend bool operator<(Rational const& a, Rational const& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  // "p" when integral, otherwise "p/q".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts both "p" and "p/q".
  static Rational parse(std::string const& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    }
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, Rational const& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
      throw std::overflow_error("Rational: 64-bit overflow");
    }
    return static_cast<std::int64_t>(v);
  }

  void normalize() {
    *this = make(num_, den_);
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace catalan

#endif  // CATALAN_RATIONAL_HPP

#pragma once

// Exact arbitrary-precision rational arithmetic. Every scalar in this
// project that carries mathematical meaning is a Rational; no floating
// point appears on any comparison path.
//
// Invariants: lowest terms, denominator > 0, zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace jarnik {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

// Floor division for possibly-negative operands; d must be nonzero.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if ((n % d) != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if ((n % d) != 0 && ((n < 0) == (d < 0))) ++q;
  return q;
}

// Euclidean remainder in [0, |d|).
inline BigInt mod_floor(const BigInt& n, const BigInt& d) {
  return n - floor_div(n, d) * d;
}

inline std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s));
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::domain_error("Rational: cannot parse '" + s + "'");
    }
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }

  // Canonical form "num/den", lossless under parse().
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  friend Rational operator-(const Rational& x) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }
  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = big_gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }
inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

// Exact x^e for integer e (e may be negative when x != 0).
inline Rational pow_int(const Rational& x, long long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long long n = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                : static_cast<unsigned long long>(e);
  if (invert && x.is_zero()) throw std::domain_error("pow_int: 0 to negative power");
  BigInt pn = boost::multiprecision::pow(x.num(), static_cast<unsigned>(n));
  BigInt pd = boost::multiprecision::pow(x.den(), static_cast<unsigned>(n));
  return invert ? Rational(pd, pn) : Rational(pn, pd);
}

inline Rational pow2(long long e) { return pow_int(Rational(2), e); }

}  // namespace jarnik

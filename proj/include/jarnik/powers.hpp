#pragma once

// Directed-rounding machinery for the irrational quantities the
// constructions touch: p^e with rational e, log2 and ln of integers.
// Inequalities between products of rational powers are decided exactly
// by clearing exponent denominators and comparing big-integer products;
// a bit-length prefilter keeps the common case cheap.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jarnik/errors.hpp"
#include "jarnik/rational.hpp"

namespace jarnik {

// Floor of the v-th root of n (n >= 0, v >= 1).
BigInt iroot(const BigInt& n, unsigned v);

enum class Direction { lower, upper };

// A one-sided rational bound on p^e together with what it bounds.
struct DirectedBound {
  Rational value;
  Direction direction;
  BigInt base;
  Rational exponent;
  Rational relative_error_bound;  // 2^-precision, 0 when exact
};

struct BoundPair {
  Rational lo;
  Rational hi;
  bool exact = false;  // lo == hi

  Rational pick(Direction d) const { return d == Direction::lower ? lo : hi; }
};

// Bounds on p^e with relative error <= 2^-precision; exact whenever
// p^e is rational (integer e, or a perfect-power base).
BoundPair pow_bounds(const BigInt& p, const Rational& e, unsigned precision);

inline DirectedBound pow_bound(const BigInt& p, const Rational& e, unsigned precision,
                               Direction dir) {
  BoundPair b = pow_bounds(p, e, precision);
  return DirectedBound{b.pick(dir), dir, p, e,
                       b.exact ? Rational(0) : pow_int(Rational(2), -(long long)precision)};
}

// Bounds on x^e for rational x > 0.
BoundPair rat_pow_bounds(const Rational& x, const Rational& e, unsigned precision);

// Enclosure of ln 2 with width < 2^-precision.
BoundPair ln2_bounds(unsigned precision);

// Enclosure of log2(m), exact for powers of two.
BoundPair log2_bounds(const BigInt& m, unsigned precision);

// Enclosure of the natural log of m (m >= 2).
BoundPair ln_bounds(const BigInt& m, unsigned precision);

// ---------------------------------------------------------------------------
// Exact comparison of products of rational powers.

struct PowTerm {
  Rational base;  // > 0
  Rational exp;
};

struct PowProduct {
  Rational coeff{1};  // > 0
  std::vector<PowTerm> terms;

  PowProduct& mul(Rational base, Rational exp) {
    terms.push_back({std::move(base), std::move(exp)});
    return *this;
  }
  PowProduct& mul_coeff(const Rational& c) {
    coeff *= c;
    return *this;
  }
};

// Exact three-way comparison of two products; always decides.
int compare_pow_products(const PowProduct& lhs, const PowProduct& rhs);

inline bool pow_lt(const PowProduct& a, const PowProduct& b) {
  return compare_pow_products(a, b) < 0;
}
inline bool pow_le(const PowProduct& a, const PowProduct& b) {
  return compare_pow_products(a, b) <= 0;
}

inline PowProduct pp(const Rational& coeff) {
  PowProduct p;
  p.coeff = coeff;
  return p;
}

// ---------------------------------------------------------------------------
// Directed interval values for the ln-weighted expressions of family F.

struct DirectedValue {
  Rational lo;
  Rational hi;

  static DirectedValue exact(const Rational& x) { return {x, x}; }
  friend DirectedValue operator*(const DirectedValue& a, const DirectedValue& b) {
    // positive operands only
    return {a.lo * b.lo, a.hi * b.hi};
  }
};

// Tri-state comparison of enclosures: -1, +1, or throws undecided_error
// when the enclosures overlap (after the caller's escalation budget).
inline int compare_directed(const DirectedValue& a, const DirectedValue& b) {
  if (a.hi < b.lo) return -1;
  if (b.hi < a.lo) return 1;
  throw undecided_error("directed comparison undecided: [" + a.lo.str() + "," + a.hi.str() +
                        "] vs [" + b.lo.str() + "," + b.hi.str() + "]");
}

}  // namespace jarnik

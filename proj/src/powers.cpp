#include "jarnik/powers.hpp"

#include <algorithm>
#include <map>

namespace jarnik {

namespace {

BigInt bpow(const BigInt& b, unsigned long long e) {
  BigInt r = 1, x = b;
  unsigned long long n = e;
  while (n > 0) {
    if (n & 1) r *= x;
    n >>= 1;
    if (n) x *= x;
  }
  return r;
}

}  // namespace

BigInt iroot(const BigInt& n, unsigned v) {
  if (n < 0) throw invariant_error("iroot: negative radicand");
  if (v == 0) throw invariant_error("iroot: zeroth root");
  if (n == 0 || n == 1 || v == 1) return n;
  if (v == 2) return boost::multiprecision::sqrt(n);
  // Newton iteration from an over-estimate; terminates because the
  // iterate is strictly decreasing until it crosses the root.
  std::size_t bits = bit_length(n);
  BigInt x = BigInt(1) << static_cast<unsigned>((bits + v - 1) / v);
  while (true) {
    BigInt xpow = bpow(x, v - 1);
    BigInt next = ((v - 1) * x + n / xpow) / v;
    if (next >= x) break;
    x = next;
  }
  while (bpow(x, v) > n) --x;
  while (bpow(x + 1, v) <= n) ++x;
  return x;
}

BoundPair pow_bounds(const BigInt& p, const Rational& e, unsigned precision) {
  if (p < 2) throw invariant_error("pow_bounds: base must be >= 2");
  if (precision < 8) throw invariant_error("pow_bounds: precision must be >= 8");
  if (e.is_zero()) return {Rational(1), Rational(1), true};

  const bool negative = e.sign() < 0;
  const Rational ae = negative ? -e : e;
  if (ae.num() * BigInt(bit_length(p)) > BigInt(1) << 26 || ae.den() > BigInt(1) << 20)
    throw capacity_error("pow_bounds: exponent too large for direct evaluation");
  const auto u = static_cast<unsigned long long>(ae.num());
  const auto v = static_cast<unsigned long long>(ae.den());

  BigInt n = bpow(p, u);
  if (v == 1) {
    Rational exact = negative ? Rational(BigInt(1), n) : Rational(n);
    return {exact, exact, true};
  }

  BigInt r = iroot(n, static_cast<unsigned>(v));
  if (bpow(r, static_cast<unsigned>(v)) == n) {
    Rational exact = negative ? Rational(BigInt(1), r) : Rational(r);
    return {exact, exact, true};
  }

  // Scale by 2^(t*v) so the integer root carries t extra bits:
  // R <= n^(1/v) * 2^t < R+1, hence (R+1)/R - 1 <= 2^-t <= 2^-precision.
  const unsigned t = precision + 2;
  BigInt scaled = n << static_cast<unsigned>(t * v);
  BigInt root = iroot(scaled, static_cast<unsigned>(v));
  BigInt den = BigInt(1) << t;
  Rational lo(root, den), hi(root + 1, den);
  if (negative) return {Rational(1) / hi, Rational(1) / lo, false};
  return {lo, hi, false};
}

BoundPair rat_pow_bounds(const Rational& x, const Rational& e, unsigned precision) {
  if (x.sign() <= 0) throw invariant_error("rat_pow_bounds: base must be positive");
  if (e.is_zero() || x == Rational(1)) return {Rational(1), Rational(1), true};
  if (e.sign() < 0) return rat_pow_bounds(Rational(x.den(), x.num()), -e, precision);

  auto one = BoundPair{Rational(1), Rational(1), true};
  BoundPair num_b = x.num() == 1 ? one : pow_bounds(x.num(), e, precision + 2);
  BoundPair den_b = x.den() == 1 ? one : pow_bounds(x.den(), e, precision + 2);
  return {num_b.lo / den_b.hi, num_b.hi / den_b.lo, num_b.exact && den_b.exact};
}

BoundPair ln2_bounds(unsigned precision) {
  // ln 2 = sum_{k>=1} 1/(k 2^k); tail after K is below 1/((K+1) 2^(K-1)).
  static std::map<unsigned, BoundPair> cache;
  auto it = cache.find(precision);
  if (it != cache.end()) return it->second;

  const unsigned K = precision + 4;
  Rational s(0);
  for (unsigned k = 1; k <= K; ++k) s += Rational(BigInt(1), BigInt(k) << k);
  Rational tail(BigInt(1), BigInt(K + 1) << (K - 1));
  BoundPair out{s, s + tail, false};
  cache[precision] = out;
  return out;
}

BoundPair log2_bounds(const BigInt& m, unsigned precision) {
  if (m < 1) throw invariant_error("log2_bounds: m must be >= 1");
  if (m == 1) return {Rational(0), Rational(0), true};
  const std::size_t bl = bit_length(m);
  if ((m & (m - 1)) == 0) {
    Rational exact(BigInt(bl - 1));
    return {exact, exact, true};
  }

  // Work with the top S+8 bits of m; then extract fractional bits of
  // log2 by directed square-and-shift.
  const unsigned S = precision + 16;
  BigInt y_lo = m, y_hi;
  long long drop = static_cast<long long>(bl) - static_cast<long long>(S + 8);
  if (drop > 0) {
    y_lo = m >> static_cast<unsigned>(drop);
    y_hi = y_lo + 1;
  } else {
    y_hi = y_lo;
  }
  const long long int_part = static_cast<long long>(bl) - 1;
  const std::size_t w_ref = bit_length(y_lo);

  auto frac_log2 = [&](BigInt y, bool round_up) -> Rational {
    // y in [2^(w_ref-1), 2^w_ref]; returns a one-sided bound on
    // log2(y) - (w_ref-1) with denominator 2^precision.
    BigInt x = (y << S) >> static_cast<unsigned>(w_ref - 1);
    if (round_up) ++x;
    BigInt acc = 0;
    for (unsigned i = 0; i < precision; ++i) {
      x = (x * x) >> S;
      if (round_up) ++x;
      acc <<= 1;
      if (bit_length(x) > S + 1) {  // x >= 2
        x >>= 1;
        if (round_up) ++x;
        acc += 1;
      }
    }
    if (round_up) acc += 4;  // cover accumulated truncation slack
    return Rational(acc, BigInt(1) << precision);
  };

  Rational frac_lo = frac_log2(y_lo, false);
  Rational frac_hi = frac_log2(y_hi, true);
  // log2(m) = int_part + frac where frac computed on the truncated top
  // bits; y_lo <= m/2^drop <= y_hi makes the bracket directed.
  Rational base = Rational(BigInt(int_part));
  return {base + frac_lo, base + frac_hi, false};
}

BoundPair ln_bounds(const BigInt& m, unsigned precision) {
  if (m < 2) throw invariant_error("ln_bounds: m must be >= 2");
  BoundPair l2 = log2_bounds(m, precision + 4);
  BoundPair c = ln2_bounds(precision + 4);
  return {l2.lo * c.lo, l2.hi * c.hi, false};
}

// ---------------------------------------------------------------------------

namespace {

struct Factored {
  // value = 2^shift * prod odd_i^e_i with e_i > 0
  long long shift = 0;
  std::vector<std::pair<BigInt, unsigned long long>> odds;
};

void accumulate(Factored& side, const BigInt& v, unsigned long long e) {
  if (v == 1) return;
  BigInt odd = v;
  unsigned tz = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++tz;
  }
  side.shift += static_cast<long long>(tz) * static_cast<long long>(e);
  if (odd > 1) side.odds.emplace_back(odd, e);
}

// Rigorous bracket of log2(v) for odd v >= 3, scaled by 2^16.
std::pair<long long, long long> log2_fixed(const BigInt& v) {
  std::size_t bl = bit_length(v);
  unsigned T = 48;
  BigInt top = bl > T ? BigInt(v >> static_cast<unsigned>(bl - T))
                      : BigInt(v << static_cast<unsigned>(T - bl));
  auto ull = static_cast<unsigned long long>(top);
  // frac bits of log2(top / 2^(T-1)) via u128 square-and-shift
  auto frac = [&](unsigned long long y, bool up) -> long long {
    unsigned __int128 x = (static_cast<unsigned __int128>(y) << 60) >> (T - 1);
    long long acc = 0;
    for (int i = 0; i < 16; ++i) {
      x = (x * x) >> 60;
      if (up) ++x;
      acc <<= 1;
      if (x >> 61) {
        x >>= 1;
        if (up) ++x;
        acc += 1;
      }
    }
    return up ? acc + 4 : acc;
  };
  long long ip = (static_cast<long long>(bl) - 1) << 16;
  long long lo = ip + frac(ull, false);
  long long hi = ip + frac(ull + 1, true) + 1;
  return {lo, hi};
}

}  // namespace

int compare_pow_products(const PowProduct& lhs, const PowProduct& rhs) {
  // Reduce to prod base_i^{x_i} ? 1 with signed rational exponents.
  std::vector<PowTerm> all;
  auto push = [&all](const Rational& base, const Rational& exp) {
    if (base.sign() <= 0) throw invariant_error("compare_pow_products: nonpositive base");
    if (base == Rational(1) || exp.is_zero()) return;
    all.push_back({base, exp});
  };
  push(lhs.coeff, Rational(1));
  for (const auto& t : lhs.terms) push(t.base, t.exp);
  push(rhs.coeff, Rational(-1));
  for (const auto& t : rhs.terms) push(t.base, -t.exp);
  if (all.empty()) return 0;

  BigInt V = 1;
  for (const auto& t : all) V = V / big_gcd(V, t.exp.den()) * t.exp.den();
  if (V > (BigInt(1) << 22))
    throw capacity_error("compare_pow_products: exponent denominators too large");

  // numerator side (num) holds factors with positive cleared exponent
  Factored num, den;
  for (const auto& t : all) {
    BigInt cleared = t.exp.num() * (V / t.exp.den());
    if (cleared == 0) continue;
    bool pos = cleared > 0;
    BigInt mag = pos ? cleared : -cleared;
    if (mag > (BigInt(1) << 40)) throw capacity_error("compare_pow_products: exponent overflow");
    auto e = static_cast<unsigned long long>(mag);
    accumulate(pos ? num : den, t.base.num(), e);
    accumulate(pos ? den : num, t.base.den(), e);
  }

  // Bit-length prefilter on log2 of both sides, scale 2^16.
  __int128 lo_diff = (static_cast<__int128>(num.shift - den.shift)) << 16;
  __int128 hi_diff = lo_diff;
  for (const auto& [v, e] : num.odds) {
    auto [l, h] = log2_fixed(v);
    lo_diff += static_cast<__int128>(l) * static_cast<__int128>(e);
    hi_diff += static_cast<__int128>(h) * static_cast<__int128>(e);
  }
  for (const auto& [v, e] : den.odds) {
    auto [l, h] = log2_fixed(v);
    lo_diff -= static_cast<__int128>(h) * static_cast<__int128>(e);
    hi_diff -= static_cast<__int128>(l) * static_cast<__int128>(e);
  }
  if (lo_diff > 0) return 1;
  if (hi_diff < 0) return -1;

  // Exact fallback: compare 2^(num.shift) * prod num.odds^e against the
  // denominator side directly.
  auto product = [](const Factored& f) {
    BigInt r = 1;
    for (const auto& [v, e] : f.odds) {
      if (BigInt(bit_length(v)) * BigInt(e) > (BigInt(1) << 31))
        throw capacity_error("compare_pow_products: exact product too large");
      r *= bpow(v, e);
    }
    return r;
  };
  BigInt ln = product(num), rd = product(den);
  long long sh = num.shift - den.shift;
  if (sh > 0)
    ln <<= static_cast<unsigned>(sh);
  else if (sh < 0)
    rd <<= static_cast<unsigned>(-sh);
  if (ln < rd) return -1;
  if (rd < ln) return 1;
  return 0;
}

}  // namespace jarnik

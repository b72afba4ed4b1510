#pragma once

// Parameter-sequence synthesis: the growth schedule for the level
// denominators m_k, the per-level thinning moduli q_k with their
// two-sided window certificates, and the stage rationals used by the
// effective path recursion. Strict mode certifies every inequality
// exactly; demo mode records the same rows against user-supplied
// parameters without enforcing them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jarnik/powers.hpp"
#include "jarnik/primes.hpp"
#include "jarnik/rational.hpp"

namespace jarnik {

enum class Family { EJ, E, F, G };
enum class Mode { strict, demo };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct TargetSpec {
  Rational a;
  Rational b;
  Family family = Family::E;
  int depth = 1;
  Mode mode = Mode::strict;

  // Throws config_error on an invalid family/parameter pairing.
  void validate() const;
};

// One verified (or recorded) inequality. lhs/rhs are the exact rational
// bounds actually compared, as fraction strings.
struct CheckRow {
  int level = 0;
  std::string constraint;
  std::string lhs;
  std::string rhs;
  std::string relation;
  bool checked = true;
  bool satisfied = true;
  std::string note;
};

struct SynthReport {
  std::vector<CheckRow> rows;

  void add(CheckRow r) { rows.push_back(std::move(r)); }
  bool all_passed() const {
    for (const auto& r : rows)
      if (r.checked && !r.satisfied) return false;
    return true;
  }
  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& r : rows)
      if (r.checked && !r.satisfied) ++n;
    return n;
  }
};

struct ParamSequences {
  std::vector<Rational> a_seq;        // a_1..a_K
  std::vector<Rational> b_seq;        // b_1..b_{K+2}
  std::vector<BigInt> m_seq;          // m_1..m_K
  std::vector<BigInt> q_seq;          // q_1..q_K
  std::vector<Rational> C_seq;        // accumulated constant per level
  std::vector<Rational> epsilon_seq;  // effective mode only
};

struct Synthesis {
  TargetSpec target;
  ParamSequences seqs;
  SynthReport report;
};

// Finite-prefix check of the appropriateness conditions; returns the
// first violated clause, or nullopt when all hold.
std::optional<std::string> validate_appropriate(const std::vector<Rational>& a_seq,
                                                const std::vector<Rational>& b_seq,
                                                const Rational& a, const Rational& b);

struct StageRationals {
  Rational alpha;
  Rational alpha_bar;
  Rational beta;
  Rational epsilon;
};

// Next stage parameters: alpha_s < alpha' < a < abar' <= abar_s,
// |abar' - alpha'| < 1/(s+1), beta_s + eps_s < beta' < b,
// |b - beta'| < 1/(s+1), beta' + eps' < b. Deterministic midpoint rule.
StageRationals synth_stage_rationals(int s, const Rational& a, const Rational& b,
                                     const StageRationals& prior);

struct SynthOptions {
  unsigned precision_bits = 64;
  std::uint64_t sieve_ceiling = kDefaultSieveCeiling;
  long long max_m_bits = 1 << 22;  // capacity cap on log2(m_k)
  std::vector<BigInt> demo_m;      // demo mode: user-supplied m_k
  std::vector<BigInt> demo_q;      // demo mode: optional user q_k
};

// The default strictly increasing b-schedule: b_k = b - (b - base)/2^(k-1)
// with base = (1/a + b)/2 when 1/a < b, else b/4.
std::vector<Rational> default_b_schedule(const Rational& a, const Rational& b, int count);

// Largest q with the family's defining inequality C * w(m) * m^x < 1/q,
// where w carries the log weight for family F and the factor 2 for
// family G; also certifies the two-sided window. Returns q and appends
// certificate rows.
BigInt synth_q(int k, const BigInt& m, const Rational& a_k, const Rational& b_k1,
               const Rational& b_k2, const Rational& C, Family family,
               const SynthOptions& opt, SynthReport* report, bool enforce);

// Least admissible power of two for level k given the accumulated
// constraint list; appends the list to the report.
struct GrowthInput {
  int k = 1;
  BigInt m_prev = 0;
  Rational a_k;
  Rational b_k, b_k1, b_k2;  // b_k, b_{k+1}, b_{k+2}
  Rational C;
  Family family = Family::E;
  // effective mode: description bits D must fit in a*(b-beta)*log2(m)
  bool effective = false;
  long long description_bits = 0;
  Rational a_target;  // limit a (bit-budget uses the target)
  Rational b_target;
  Rational beta_next;
};

BigInt growth_f(const GrowthInput& in, const SynthOptions& opt, SynthReport* report);

// Accumulated constant for level k (k >= 1) from the already-synthesized
// prefix; monotone rational over-approximation.
Rational accumulated_constant(int k, Family family, const Rational& a_limit,
                              const std::vector<Rational>& a_seq,
                              const std::vector<BigInt>& m_seq,
                              const std::vector<BigInt>& q_seq, unsigned precision_bits);

// Full synthesis: sequences plus certificate report for the target.
Synthesis synthesize(const TargetSpec& target, const SynthOptions& opt);

}  // namespace jarnik

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

/// Per-species growth law of a monomial state sequence x_n:
///   Zero      -> x_{n,i} = 0
///   Constant  -> x_{n,i} = v            (v >= 1)
///   Power     -> x_{n,i} = floor(c n^e) (c > 0, e > 0)
struct GrowthLaw {
  enum class Kind { Zero, Constant, Power };

  Kind kind = Kind::Zero;
  std::int64_t value = 0;  // Constant only
  Rational coeff{1};       // Power only
  Rational expo{1};        // Power only

  static GrowthLaw zero() { return {}; }
  static GrowthLaw constant(std::int64_t v);
  static GrowthLaw power(Rational c, Rational e);

  bool is_power() const { return kind == Kind::Power; }
  friend bool operator==(const GrowthLaw& a, const GrowthLaw& b) {
    return a.kind == b.kind && a.value == b.value && a.coeff == b.coeff && a.expo == b.expo;
  }
  std::string to_string() const;
};

struct InvalidTierSequence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Symbolic state sequence, one growth law per species. At least one law
/// must be Power (some coordinate diverges). On the tail n >= tail_start,
/// every Power coordinate realizes to a count >= 2, so the asymptotic
/// comparisons below are valid for all realized states.
struct MonomialSequence {
  std::vector<GrowthLaw> laws;
  std::int64_t tail_start = 1;

  static MonomialSequence make(std::vector<GrowthLaw> laws);
  std::string to_string(const ReactionNetwork& net) const;
};

/// Realized state at index n, as real-valued coordinates (Power laws with
/// large exponents exceed 64-bit integers well before n = 10^6).
std::vector<double> realize(const MonomialSequence& seq, double n);

/// Parses a per-species assignment like "A=n^2, B=0, C=c1, D=n^2*3".
/// Accepted right-hand sides: "0", "c<int>", "n", "n^E", "n^E*C", "n*C"
/// with E, C positive rationals written as "2", "1/2" or "0.5".
MonomialSequence parse_sequence_spec(const ReactionNetwork& net, const std::string& spec);

/// Asymptotic size of (x_n v 1)^y: it grows like coefficient * n^degree.
struct DegreeInfo {
  Rational degree{0};
  Rational coefficient{1};
};

DegreeInfo complex_degree(const Complex& y, const MonomialSequence& seq);

/// Tier analysis of a network's complex set along a monomial sequence.
/// d_tiers orders complexes by strictly decreasing degree of (x_n v 1)^y;
/// s_infinity collects complexes whose intensity vanishes identically on
/// the tail; s_tiers is the degree ordering restricted to the rest. All
/// entries are complex indices into net.complexes().
struct TierReport {
  std::vector<std::vector<int>> d_tiers;
  std::vector<Rational> d_degrees;  // one per D-tier, strictly decreasing
  std::vector<std::vector<int>> s_tiers;
  std::vector<int> s_infinity;
  std::vector<int> descending_reactions;  // reaction indices
  std::vector<int> descending_sources;    // complex indices, subset of d_tiers[0]
  /// Some descending source lies in the top S-tier.
  bool top_s_tier_has_descending_source = false;
  /// Descending set nonempty and the top D- and S-tiers coincide.
  bool top_tiers_equal_and_descending = false;

  const std::vector<int>& top_d_tier() const { return d_tiers.front(); }
  std::vector<int> top_s_tier() const {
    return s_tiers.empty() ? std::vector<int>{} : s_tiers.front();
  }
};

TierReport tier_partitions(const ReactionNetwork& net, const MonomialSequence& seq);

/// Reactions y -> y' with y in the top D-tier and y' strictly below it.
std::vector<int> descending_reactions(const ReactionNetwork& net, const MonomialSequence& seq);

/// Menu of candidate growth laws per species; the search enumerates every
/// assignment drawing one law per species, lexicographically (species 0
/// most significant), skipping assignments with no Power law.
struct SequenceFamily {
  std::vector<std::vector<GrowthLaw>> menu;

  /// Zero | Const(1) | Const(2) | n | n^2 | n^4 for every species. The
  /// exponent grid {1,2,4} separates every ordering of two-term exponent
  /// sums, which is what binary complexes can produce.
  static SequenceFamily default_family(SpeciesId species_count);
};

struct CounterexampleSearch {
  bool found = false;
  MonomialSequence sequence;  // valid when found
  TierReport report;          // valid when found
  std::int64_t assignments_tested = 0;
  std::int64_t distinct_structures = 0;
};

/// Scans the family in enumeration order for a sequence along which no
/// descending source sits in the top S-tier. Absence is evidence over the
/// tested family only, never a proof over all tier sequences.
CounterexampleSearch search_counterexample(const ReactionNetwork& net,
                                           const SequenceFamily& family);

}  // namespace crn

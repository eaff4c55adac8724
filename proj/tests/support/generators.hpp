#pragma once

// Randomized fixtures for the property suites: binary networks with every
// species reachable from the complex pool, double-full variants, and
// monomial sequences.

#include <algorithm>
#include <set>
#include <vector>

#include "crn/network.hpp"
#include "crn/rng.hpp"
#include "crn/tiers.hpp"

namespace testgen {

inline std::vector<crn::Complex> binary_complex_pool(crn::SpeciesId d) {
  std::vector<crn::Complex> pool;
  pool.push_back(crn::Complex::zero());
  for (crn::SpeciesId i = 0; i < d; ++i) pool.push_back(crn::Complex::unary(i));
  for (crn::SpeciesId i = 0; i < d; ++i)
    for (crn::SpeciesId j = i; j < d; ++j)
      pool.push_back(i == j ? crn::Complex::twice(i) : crn::Complex::pair(i, j));
  return pool;
}

inline double random_rate(crn::SplitMix64& rng) { return 0.1 + 9.9 * rng.next_unit(); }

/// Random binary network on up to `max_species` species in which every
/// species occurs in some complex.
inline crn::ReactionNetwork random_binary_network(crn::SplitMix64& rng,
                                                  crn::SpeciesId max_species = 6) {
  const crn::SpeciesId d = 1 + static_cast<crn::SpeciesId>(rng.next_u64() % max_species);
  auto pool = binary_complex_pool(d);

  std::vector<crn::Reaction> reactions;
  std::set<std::pair<crn::Complex, crn::Complex>> seen;
  auto add = [&](const crn::Complex& src, const crn::Complex& dst) {
    if (src == dst) return false;
    if (!seen.insert({src, dst}).second) return false;
    reactions.push_back({src, dst, random_rate(rng)});
    return true;
  };

  const int want = 1 + static_cast<int>(rng.next_u64() % 9);
  int guard = 0;
  while (static_cast<int>(reactions.size()) < want && guard++ < 200) {
    const auto& src = pool[rng.next_u64() % pool.size()];
    const auto& dst = pool[rng.next_u64() % pool.size()];
    add(src, dst);
  }

  std::vector<bool> used(d, false);
  for (const auto& r : reactions) {
    for (const auto& [id, c] : r.source.terms()) used[id] = true;
    for (const auto& [id, c] : r.product.terms()) used[id] = true;
  }
  for (crn::SpeciesId i = 0; i < d; ++i) {
    if (used[i]) continue;
    // Tie the orphan in with a unary decay or a pairing, whichever is new.
    if (!add(crn::Complex::unary(i), crn::Complex::zero()))
      add(crn::Complex::zero(), crn::Complex::unary(i));
  }

  std::vector<std::string> names;
  for (crn::SpeciesId i = 0; i < d; ++i) names.push_back("X" + std::to_string(i));
  return crn::ReactionNetwork(std::move(names), std::move(reactions));
}

/// Random double-full binary network: every double complex participates in
/// at least one reaction.
inline crn::ReactionNetwork random_double_full_network(crn::SplitMix64& rng,
                                                       crn::SpeciesId max_species = 5) {
  const crn::SpeciesId d = 1 + static_cast<crn::SpeciesId>(rng.next_u64() % max_species);
  auto pool = binary_complex_pool(d);

  std::vector<crn::Reaction> reactions;
  std::set<std::pair<crn::Complex, crn::Complex>> seen;
  auto add = [&](const crn::Complex& src, const crn::Complex& dst) {
    if (src == dst) return false;
    if (!seen.insert({src, dst}).second) return false;
    reactions.push_back({src, dst, random_rate(rng)});
    return true;
  };

  for (crn::SpeciesId i = 0; i < d; ++i) {
    crn::Complex dbl = crn::Complex::twice(i);
    int guard = 0;
    while (guard++ < 50) {
      const auto& other = pool[rng.next_u64() % pool.size()];
      bool ok = (rng.next_u64() & 1) ? add(dbl, other) : add(other, dbl);
      if (ok) break;
    }
  }
  const int extra = static_cast<int>(rng.next_u64() % 6);
  int guard = 0;
  for (int k = 0; k < extra && guard < 100; ++guard) {
    const auto& src = pool[rng.next_u64() % pool.size()];
    const auto& dst = pool[rng.next_u64() % pool.size()];
    if (add(src, dst)) ++k;
  }

  std::vector<std::string> names;
  for (crn::SpeciesId i = 0; i < d; ++i) names.push_back("X" + std::to_string(i));
  return crn::ReactionNetwork(std::move(names), std::move(reactions));
}

/// Random monomial sequence with at least one Power law. Constant laws stay
/// at value 1 so intensity/monomial ratios tend to 1 exactly (constant
/// coordinates >= 2 shift the limit by falling-factorial factors; that edge
/// is pinned in a dedicated unit test).
inline crn::MonomialSequence random_sequence(crn::SplitMix64& rng, crn::SpeciesId d) {
  using crn::GrowthLaw;
  using crn::Rational;
  const GrowthLaw menu[] = {
      GrowthLaw::zero(),
      GrowthLaw::constant(1),
      GrowthLaw::power(Rational(1), Rational(1)),
      GrowthLaw::power(Rational(1), Rational(2)),
      GrowthLaw::power(Rational(1), Rational(4)),
      GrowthLaw::power(Rational(2), Rational(1)),
      GrowthLaw::power(Rational(3, 2), Rational(2)),
  };
  while (true) {
    std::vector<GrowthLaw> laws(d);
    bool any_power = false;
    for (crn::SpeciesId i = 0; i < d; ++i) {
      laws[i] = menu[rng.next_u64() % std::size(menu)];
      any_power |= laws[i].is_power();
    }
    if (any_power) return crn::MonomialSequence::make(std::move(laws));
  }
}

/// Random state with coordinates in [0, max_count].
inline crn::State random_state(crn::SplitMix64& rng, crn::SpeciesId d,
                               std::int64_t max_count) {
  crn::State x(d, 0);
  for (auto& v : x) v = static_cast<std::int64_t>(rng.next_u64() % (max_count + 1));
  return x;
}

}  // namespace testgen

#include "crn/tiers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace crn {

GrowthLaw GrowthLaw::constant(std::int64_t v) {
  if (v < 1) throw InvalidTierSequence("constant law needs value >= 1");
  GrowthLaw law;
  law.kind = Kind::Constant;
  law.value = v;
  return law;
}

GrowthLaw GrowthLaw::power(Rational c, Rational e) {
  if (!c.is_positive() || !e.is_positive())
    throw InvalidTierSequence("power law needs positive coefficient and exponent");
  GrowthLaw law;
  law.kind = Kind::Power;
  law.coeff = c;
  law.expo = e;
  return law;
}

std::string GrowthLaw::to_string() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Constant:
      return "c" + std::to_string(value);
    case Kind::Power: {
      std::string s = "n";
      if (expo != Rational(1)) s += "^" + expo.to_string();
      if (coeff != Rational(1)) s += "*" + coeff.to_string();
      return s;
    }
  }
  return {};
}

MonomialSequence MonomialSequence::make(std::vector<GrowthLaw> laws) {
  bool any_power = false;
  for (const auto& law : laws) any_power |= law.is_power();
  if (!any_power)
    throw InvalidTierSequence("monomial sequence needs at least one diverging coordinate");

  MonomialSequence seq;
  seq.laws = std::move(laws);
  // Smallest n with floor(c n^e) >= 2 for every Power coordinate.
  std::int64_t tail = 1;
  for (const auto& law : seq.laws) {
    if (!law.is_power()) continue;
    double c = law.coeff.to_double(), e = law.expo.to_double();
    std::int64_t n = static_cast<std::int64_t>(std::ceil(std::pow(2.0 / c, 1.0 / e)));
    n = std::max<std::int64_t>(n, 1);
    while (std::floor(c * std::pow(static_cast<double>(n), e)) < 2.0) ++n;
    tail = std::max(tail, n);
  }
  seq.tail_start = tail;
  return seq;
}

std::string MonomialSequence::to_string(const ReactionNetwork& net) const {
  std::string out;
  for (SpeciesId i = 0; i < net.species_count(); ++i) {
    if (i) out += ",";
    out += net.species()[i] + "=" + laws[i].to_string();
  }
  return out;
}

std::vector<double> realize(const MonomialSequence& seq, double n) {
  std::vector<double> x(seq.laws.size(), 0.0);
  for (std::size_t i = 0; i < seq.laws.size(); ++i) {
    const GrowthLaw& law = seq.laws[i];
    switch (law.kind) {
      case GrowthLaw::Kind::Zero:
        x[i] = 0.0;
        break;
      case GrowthLaw::Kind::Constant:
        x[i] = static_cast<double>(law.value);
        break;
      case GrowthLaw::Kind::Power:
        x[i] = std::floor(law.coeff.to_double() * std::pow(n, law.expo.to_double()));
        break;
    }
  }
  return x;
}

namespace {

GrowthLaw parse_law(const std::string& rhs) {
  if (rhs == "0") return GrowthLaw::zero();
  if (rhs.size() >= 2 && rhs[0] == 'c') {
    return GrowthLaw::constant(std::stoll(rhs.substr(1)));
  }
  if (rhs[0] == 'n') {
    Rational e{1}, c{1};
    std::size_t pos = 1;
    if (pos < rhs.size() && rhs[pos] == '^') {
      std::size_t star = rhs.find('*', pos);
      std::string etok = rhs.substr(pos + 1, star == std::string::npos ? std::string::npos
                                                                       : star - pos - 1);
      e = Rational::parse(etok);
      pos = star == std::string::npos ? rhs.size() : star;
    }
    if (pos < rhs.size() && rhs[pos] == '*') {
      c = Rational::parse(rhs.substr(pos + 1));
      pos = rhs.size();
    }
    if (pos != rhs.size()) throw InvalidTierSequence("malformed growth law: " + rhs);
    return GrowthLaw::power(c, e);
  }
  throw InvalidTierSequence("malformed growth law: " + rhs);
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

MonomialSequence parse_sequence_spec(const ReactionNetwork& net, const std::string& spec) {
  std::vector<GrowthLaw> laws(net.species_count());
  std::vector<bool> assigned(net.species_count(), false);

  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidTierSequence("expected species=law, got: " + item);
    std::string name = strip(item.substr(0, eq));
    std::string rhs = strip(item.substr(eq + 1));
    SpeciesId id = -1;
    for (SpeciesId i = 0; i < net.species_count(); ++i)
      if (net.species()[i] == name) id = i;
    if (id < 0) throw InvalidTierSequence("unknown species in sequence spec: " + name);
    if (assigned[id]) throw InvalidTierSequence("species assigned twice: " + name);
    laws[id] = parse_law(rhs);
    assigned[id] = true;
  }
  for (SpeciesId i = 0; i < net.species_count(); ++i)
    if (!assigned[i])
      throw InvalidTierSequence("no growth law for species " + net.species()[i]);
  return MonomialSequence::make(std::move(laws));
}

DegreeInfo complex_degree(const Complex& y, const MonomialSequence& seq) {
  DegreeInfo info;
  for (const auto& [id, c] : y.terms()) {
    const GrowthLaw& law = seq.laws.at(id);
    switch (law.kind) {
      case GrowthLaw::Kind::Zero:
        break;  // (x v 1) contributes factor 1
      case GrowthLaw::Kind::Constant:
        info.coefficient *= Rational(law.value).pow(static_cast<int>(c));
        break;
      case GrowthLaw::Kind::Power:
        info.degree += law.expo * Rational(c);
        info.coefficient *= law.coeff.pow(static_cast<int>(c));
        break;
    }
  }
  return info;
}

namespace {

/// Intensity of y vanishes for every realized tail state iff some species
/// is pinned below its stoichiometric requirement.
bool in_s_infinity(const Complex& y, const MonomialSequence& seq) {
  for (const auto& [id, c] : y.terms()) {
    const GrowthLaw& law = seq.laws.at(id);
    if (law.kind == GrowthLaw::Kind::Zero && c >= 1) return true;
    if (law.kind == GrowthLaw::Kind::Constant && c > law.value) return true;
  }
  return false;
}

}  // namespace

TierReport tier_partitions(const ReactionNetwork& net, const MonomialSequence& seq) {
  if (seq.laws.size() != static_cast<std::size_t>(net.species_count()))
    throw InvalidTierSequence("sequence has wrong species count");
  bool any_power = false;
  for (const auto& law : seq.laws) any_power |= law.is_power();
  if (!any_power) throw InvalidTierSequence("sequence has no diverging coordinate");

  TierReport report;
  const auto& complexes = net.complexes();

  // Group complexes by exact degree, descending. Equal degree means the
  // ratio (x_n v 1)^y / (x_n v 1)^{y'} tends to the (finite, positive)
  // coefficient ratio, i.e. the same D-tier.
  std::map<Rational, std::vector<int>, std::greater<Rational>> by_degree;
  for (int i = 0; i < static_cast<int>(complexes.size()); ++i)
    by_degree[complex_degree(complexes[i], seq).degree].push_back(i);
  for (auto& [deg, members] : by_degree) {
    report.d_degrees.push_back(deg);
    report.d_tiers.push_back(std::move(members));
  }

  // Intensities keep the same asymptotic ordering on the complexes whose
  // intensity does not vanish: lambda_y(x_n) differs from (x_n v 1)^y by a
  // factor that stays bounded within (0, 1]. So the S-partition is the
  // D-partition restricted to the complement of the vanishing set.
  std::set<int> infinity_set;
  for (int i = 0; i < static_cast<int>(complexes.size()); ++i)
    if (in_s_infinity(complexes[i], seq)) infinity_set.insert(i);
  report.s_infinity.assign(infinity_set.begin(), infinity_set.end());
  for (const auto& tier : report.d_tiers) {
    std::vector<int> survivors;
    for (int i : tier)
      if (!infinity_set.count(i)) survivors.push_back(i);
    if (!survivors.empty()) report.s_tiers.push_back(std::move(survivors));
  }

  const std::vector<int>& top = report.d_tiers.front();
  std::set<int> top_set(top.begin(), top.end());
  std::set<int> sources;
  for (std::size_t j = 0; j < net.reactions().size(); ++j) {
    int s = net.source_index(static_cast<int>(j));
    int p = net.product_index(static_cast<int>(j));
    if (top_set.count(s) && !top_set.count(p)) {
      report.descending_reactions.push_back(static_cast<int>(j));
      sources.insert(s);
    }
  }
  report.descending_sources.assign(sources.begin(), sources.end());

  std::vector<int> top_s = report.top_s_tier();
  std::set<int> top_s_set(top_s.begin(), top_s.end());
  for (int s : report.descending_sources)
    if (top_s_set.count(s)) report.top_s_tier_has_descending_source = true;

  report.top_tiers_equal_and_descending =
      !report.descending_sources.empty() && !report.s_tiers.empty() &&
      report.s_tiers.front() == report.d_tiers.front();

  return report;
}

std::vector<int> descending_reactions(const ReactionNetwork& net, const MonomialSequence& seq) {
  return tier_partitions(net, seq).descending_reactions;
}

SequenceFamily SequenceFamily::default_family(SpeciesId species_count) {
  std::vector<GrowthLaw> menu_one = {
      GrowthLaw::zero(),
      GrowthLaw::constant(1),
      GrowthLaw::constant(2),
      GrowthLaw::power(Rational(1), Rational(1)),
      GrowthLaw::power(Rational(1), Rational(2)),
      GrowthLaw::power(Rational(1), Rational(4)),
  };
  SequenceFamily family;
  family.menu.assign(species_count, menu_one);
  return family;
}

CounterexampleSearch search_counterexample(const ReactionNetwork& net,
                                           const SequenceFamily& family) {
  const SpeciesId d = net.species_count();
  if (family.menu.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("family has wrong species count");
  for (const auto& menu : family.menu)
    if (menu.empty()) throw std::invalid_argument("empty growth-law menu");

  CounterexampleSearch result;
  // Structure signature for deduplication: the induced D-partition plus
  // the vanishing set. Two assignments with the same signature produce the
  // same TierReport verdicts.
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<int>>> seen;

  std::vector<std::size_t> pick(d, 0);
  while (true) {
    bool any_power = false;
    for (SpeciesId i = 0; i < d; ++i) any_power |= family.menu[i][pick[i]].is_power();
    if (any_power) {
      ++result.assignments_tested;
      std::vector<GrowthLaw> laws(d);
      for (SpeciesId i = 0; i < d; ++i) laws[i] = family.menu[i][pick[i]];
      MonomialSequence seq = MonomialSequence::make(std::move(laws));
      TierReport report = tier_partitions(net, seq);
      if (seen.insert({report.d_tiers, report.s_infinity}).second)
        ++result.distinct_structures;
      if (!report.top_s_tier_has_descending_source) {
        result.found = true;
        result.sequence = std::move(seq);
        result.report = std::move(report);
        return result;
      }
    }
    // Lexicographic successor, species 0 most significant.
    int i = d - 1;
    while (i >= 0 && pick[i] + 1 == family.menu[i].size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return result;
}

}  // namespace crn

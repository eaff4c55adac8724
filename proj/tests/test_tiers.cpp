#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "crn/graph.hpp"
#include "crn/rng.hpp"
#include "crn/tiers.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace crn;

namespace {

std::set<std::string> names(const ReactionNetwork& net, const std::vector<int>& indices) {
  std::set<std::string> out;
  for (int i : indices) out.insert(net.complex_name(net.complexes()[i]));
  return out;
}

MonomialSequence seq_of(const ReactionNetwork& net, const std::string& spec) {
  return parse_sequence_spec(net, spec);
}

}  // namespace

TEST_CASE("complex degree and coefficient") {
  auto net = parse_network(fixtures::kBindingExchange);
  auto seq = seq_of(net, "A=n^2,B=0,C=n");

  auto ab = complex_degree(net.complexes()[net.complex_index(Complex::pair(0, 1))], seq);
  CHECK(ab.degree == Rational(2));
  CHECK(ab.coefficient == Rational(1));

  auto zero = complex_degree(Complex::zero(), seq);
  CHECK(zero.degree == Rational(0));
  CHECK(zero.coefficient == Rational(1));

  // 2C under C = floor(3 sqrt(n)): degree 1, coefficient 9.
  auto seq2 = seq_of(net, "A=0,B=c1,C=n^1/2*3");
  auto cc = complex_degree(Complex::twice(2), seq2);
  CHECK(cc.degree == Rational(1));
  CHECK(cc.coefficient == Rational(9));

  // Constant coordinates enter the coefficient through the (x v 1) floor.
  auto seq3 = seq_of(net, "A=n,B=c2,C=c1");
  auto ab3 = complex_degree(net.complexes()[net.complex_index(Complex::pair(0, 1))], seq3);
  CHECK(ab3.degree == Rational(1));
  CHECK(ab3.coefficient == Rational(2));
}

TEST_CASE("tier partitions on the binding-exchange fixture") {
  auto net = parse_network(fixtures::kBindingExchange);

  SECTION("blocked pair sequence (n^2, 0, n)") {
    auto report = tier_partitions(net, seq_of(net, "A=n^2,B=0,C=n"));
    REQUIRE(report.d_tiers.size() == 3);
    CHECK(names(net, report.d_tiers[0]) == std::set<std::string>{"A + B"});
    CHECK(names(net, report.d_tiers[1]) == std::set<std::string>{"C"});
    CHECK(names(net, report.d_tiers[2]) == std::set<std::string>{"0"});
    CHECK(names(net, report.s_infinity) == std::set<std::string>{"A + B"});
    REQUIRE(report.s_tiers.size() == 2);
    CHECK(names(net, report.s_tiers[0]) == std::set<std::string>{"C"});
    CHECK(names(net, report.s_tiers[1]) == std::set<std::string>{"0"});
    CHECK(names(net, report.descending_sources) == std::set<std::string>{"A + B"});
    REQUIRE(report.descending_reactions.size() == 1);
    CHECK(net.reaction_name(report.descending_reactions[0]) == "A + B -> C");
    CHECK_FALSE(report.top_s_tier_has_descending_source);
    CHECK_FALSE(report.top_tiers_equal_and_descending);
  }

  SECTION("all coordinates diverge") {
    auto report = tier_partitions(net, seq_of(net, "A=n,B=n,C=n"));
    REQUIRE(report.d_tiers.size() == 3);
    CHECK(report.s_infinity.empty());
    REQUIRE(report.s_tiers.size() == 3);
    CHECK(report.s_tiers == report.d_tiers);
    CHECK(names(net, report.descending_sources) == std::set<std::string>{"A + B"});
    CHECK(report.top_s_tier_has_descending_source);
    CHECK(report.top_tiers_equal_and_descending);
  }

  SECTION("no diverging coordinate is rejected") {
    CHECK_THROWS_AS(seq_of(net, "A=c1,B=c1,C=c1"), InvalidTierSequence);
    CHECK_THROWS_AS(seq_of(net, "A=0,B=0,C=0"), InvalidTierSequence);
  }
}

TEST_CASE("tier partitions on the double pair fixture") {
  auto net = parse_network(fixtures::kDoublePair);
  auto report = tier_partitions(net, seq_of(net, "A=n"));
  REQUIRE(report.d_tiers.size() == 2);
  CHECK(names(net, report.d_tiers[0]) == std::set<std::string>{"2 A"});
  CHECK(names(net, report.d_tiers[1]) == std::set<std::string>{"0"});
  CHECK(report.top_tiers_equal_and_descending);
  REQUIRE(report.descending_reactions.size() == 1);
  CHECK(net.reaction_name(report.descending_reactions[0]) == "2 A -> 0");
}

TEST_CASE("descending reactions on the escape fixture, uniform growth") {
  auto net = parse_network(fixtures::kDoubleFullEscape);
  auto seq = seq_of(net, "A=n,B=n,C=n,D=n,E=n");
  auto descending = descending_reactions(net, seq);
  std::set<std::string> formulas;
  for (int j : descending) formulas.insert(net.reaction_name(j));
  CHECK(formulas == std::set<std::string>{"A + B -> B", "2 D -> A", "2 C -> B + C",
                                          "2 B -> 0", "2 E -> D"});
}

TEST_CASE("sequence spec parsing and tail start") {
  auto net = parse_network(fixtures::kBindingExchange);
  auto seq = seq_of(net, " A = n^2 , B = 0 , C = n*5 ");
  CHECK(seq.laws[0].expo == Rational(2));
  CHECK(seq.laws[2].coeff == Rational(5));
  CHECK(seq.tail_start >= 2);

  auto slow = seq_of(net, "A=n^1/2,B=0,C=n");
  CHECK(slow.tail_start >= 4);  // floor(sqrt(n)) >= 2 needs n >= 4

  CHECK_THROWS_AS(seq_of(net, "A=n"), InvalidTierSequence);          // missing species
  CHECK_THROWS_AS(seq_of(net, "A=n,B=0,Q=n"), InvalidTierSequence);  // unknown species
  CHECK_THROWS_AS(seq_of(net, "A=n,A=n,B=0"), InvalidTierSequence);  // assigned twice
  CHECK_THROWS_AS(seq_of(net, "A=n^0,B=0,C=0"), InvalidTierSequence);
}

TEST_CASE("counterexample search on the binding-exchange fixture") {
  auto net = parse_network(fixtures::kBindingExchange);
  auto search = search_counterexample(net, SequenceFamily::default_family(3));
  REQUIRE(search.found);
  CHECK_FALSE(search.report.top_s_tier_has_descending_source);
  // The first family member with the verdict: B diverges, A and C pinned at 0.
  CHECK(search.sequence.to_string(net) == "A=0,B=n,C=0");
  // 6^3 assignments minus 3^3 with no Power law.
  CHECK(search.assignments_tested <= 189);
}

TEST_CASE("counterexample search is absent on certified double-full fixtures") {
  for (const char* text : {fixtures::kDoubleFullEscape, fixtures::kDoublePair}) {
    auto net = parse_network(text);
    auto search =
        search_counterexample(net, SequenceFamily::default_family(net.species_count()));
    CHECK_FALSE(search.found);
    CHECK(search.assignments_tested > 0);
  }
}

TEST_CASE("partition properties hold on random pairs") {
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    auto net = testgen::random_binary_network(rng);
    auto seq = testgen::random_sequence(rng, net.species_count());
    auto report = tier_partitions(net, seq);

    // D-tiers partition the complex set with strictly decreasing degrees.
    std::vector<int> seen(net.complexes().size(), 0);
    for (const auto& tier : report.d_tiers) {
      REQUIRE_FALSE(tier.empty());
      for (int i : tier) ++seen[i];
    }
    for (int count : seen) REQUIRE(count == 1);
    for (std::size_t i = 1; i < report.d_degrees.size(); ++i)
      REQUIRE(report.d_degrees[i] < report.d_degrees[i - 1]);

    // S-tiers plus the vanishing set partition the complex set.
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& tier : report.s_tiers) {
      REQUIRE_FALSE(tier.empty());
      for (int i : tier) ++seen[i];
    }
    for (int i : report.s_infinity) ++seen[i];
    for (int count : seen) REQUIRE(count == 1);

    // Descending sources live in the top D-tier.
    std::set<int> top(report.d_tiers[0].begin(), report.d_tiers[0].end());
    for (int s : report.descending_sources) REQUIRE(top.count(s) == 1);

    // Flags match their definitions.
    std::set<int> top_s;
    if (!report.s_tiers.empty())
      top_s.insert(report.s_tiers[0].begin(), report.s_tiers[0].end());
    bool meets = false;
    for (int s : report.descending_sources) meets |= top_s.count(s) > 0;
    REQUIRE(report.top_s_tier_has_descending_source == meets);
    REQUIRE(report.top_tiers_equal_and_descending ==
            (!report.descending_sources.empty() && !report.s_tiers.empty() &&
             report.s_tiers.front() == report.d_tiers.front()));
  }
}

TEST_CASE("numeric ratios track the symbolic tiers") {
  SplitMix64 rng(20250802);
  for (int trial = 0; trial < 150; ++trial) {
    auto net = testgen::random_binary_network(rng);
    auto seq = testgen::random_sequence(rng, net.species_count());
    auto report = tier_partitions(net, seq);

    auto x3 = realize(seq, 1e3);
    auto x6 = realize(seq, 1e6);

    for (std::size_t ti = 0; ti < report.d_tiers.size(); ++ti) {
      const auto& tier = report.d_tiers[ti];
      for (std::size_t a = 0; a < tier.size(); ++a) {
        const Complex& ya = net.complexes()[tier[a]];
        // Same tier: the ratio approaches the coefficient ratio.
        for (std::size_t b = a + 1; b < tier.size(); ++b) {
          const Complex& yb = net.complexes()[tier[b]];
          double rho = (complex_degree(ya, seq).coefficient /
                        complex_degree(yb, seq).coefficient)
                           .to_double();
          double r3 = pow_vee(ya, x3) / pow_vee(yb, x3);
          double r6 = pow_vee(ya, x6) / pow_vee(yb, x6);
          REQUIRE(std::abs(r6 - rho) <= std::abs(r3 - rho) + 1e-9 * std::abs(rho));
        }
        // Strictly lower tier: the ratio grows between the checkpoints.
        if (ti + 1 < report.d_tiers.size()) {
          for (int lower : report.d_tiers[ti + 1]) {
            const Complex& yl = net.complexes()[lower];
            double r3 = pow_vee(ya, x3) / pow_vee(yl, x3);
            double r6 = pow_vee(ya, x6) / pow_vee(yl, x6);
            REQUIRE(r6 > r3);
          }
        }
      }
    }
  }
}

TEST_CASE("intensity over monomial splits to 0 or 1 at large n") {
  SplitMix64 rng(555);
  for (int trial = 0; trial < 150; ++trial) {
    auto net = testgen::random_binary_network(rng);
    auto seq = testgen::random_sequence(rng, net.species_count());
    auto report = tier_partitions(net, seq);
    std::set<int> infinity(report.s_infinity.begin(), report.s_infinity.end());

    auto x6 = realize(seq, 1e6);
    for (int i = 0; i < static_cast<int>(net.complexes().size()); ++i) {
      const Complex& y = net.complexes()[i];
      double ratio = complex_intensity(y, x6) / pow_vee(y, x6);
      if (infinity.count(i)) {
        REQUIRE(complex_intensity(y, x6) == 0.0);
      } else {
        REQUIRE(std::abs(ratio - 1.0) < 1e-2);
      }
    }
  }
}

TEST_CASE("intensity over monomial keeps a falling-factorial factor on constant coordinates") {
  // A doubled species pinned at the constant 2 contributes 2*1/2^2 = 1/2,
  // not 1. The tier ordering is insensitive to this positive constant; the
  // 0-or-1 split above draws Const(1) laws, where the limit is exactly 1.
  auto net = parse_network("2A <-> 0 @ 1, 1\n0 -> 2B @ 1\n");
  auto seq = parse_sequence_spec(net, "A=n,B=c2");
  auto x6 = realize(seq, 1e6);
  const Complex& bb = net.complexes()[net.complex_index(Complex::twice(1))];
  CHECK(complex_intensity(bb, x6) / pow_vee(bb, x6) == 0.5);

  auto report = tier_partitions(net, seq);
  CHECK(report.s_infinity.empty());
}

TEST_CASE("top D-tier escapes to infinity") {
  // Positive top degree; surviving top-tier complexes lead the S-order and
  // their intensities increase along the tail.
  SplitMix64 rng(909);
  for (int trial = 0; trial < 150; ++trial) {
    auto net = testgen::random_binary_network(rng);
    auto seq = testgen::random_sequence(rng, net.species_count());
    auto report = tier_partitions(net, seq);

    REQUIRE(report.d_degrees.front() > Rational(0));

    std::set<int> infinity(report.s_infinity.begin(), report.s_infinity.end());
    std::set<int> top_s;
    if (!report.s_tiers.empty())
      top_s.insert(report.s_tiers[0].begin(), report.s_tiers[0].end());

    double n1 = std::max<double>(static_cast<double>(seq.tail_start), 10.0);
    auto xa = realize(seq, n1);
    auto xb = realize(seq, 1e3 * n1);
    auto xc = realize(seq, 1e6 * n1);
    for (int i : report.d_tiers[0]) {
      if (infinity.count(i)) continue;
      REQUIRE(top_s.count(i) == 1);
      const Complex& y = net.complexes()[i];
      REQUIRE(complex_intensity(y, xa) < complex_intensity(y, xb));
      REQUIRE(complex_intensity(y, xb) < complex_intensity(y, xc));
    }
  }
}

TEST_CASE("double-full networks align their top tiers") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    auto net = testgen::random_double_full_network(rng);
    auto seq = testgen::random_sequence(rng, net.species_count());
    auto report = tier_partitions(net, seq);

    REQUIRE_FALSE(report.s_tiers.empty());
    REQUIRE(report.s_tiers.front() == report.d_tiers.front());

    bool has_double = false;
    std::set<int> top(report.d_tiers[0].begin(), report.d_tiers[0].end());
    for (int i : report.d_tiers[0]) {
      const Complex& y = net.complexes()[i];
      REQUIRE(y.order() == 2);  // only binary complexes on top
      has_double |= y.terms().size() == 1;
      // A pair on top forces both doubles onto the top tier.
      if (y.terms().size() == 2) {
        REQUIRE(top.count(net.complex_index(Complex::twice(y.terms()[0].first))) == 1);
        REQUIRE(top.count(net.complex_index(Complex::twice(y.terms()[1].first))) == 1);
      }
    }
    REQUIRE(has_double);
  }
}

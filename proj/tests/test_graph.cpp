#include <catch2/catch_amalgamated.hpp>

#include "crn/graph.hpp"
#include "crn/rng.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace crn;

namespace {

std::vector<std::string> class_formulas(const ReactionNetwork& net, const LinkageClass& cls) {
  std::vector<std::string> out;
  for (int i : cls.complex_indices) out.push_back(net.complex_name(net.complexes()[i]));
  return out;
}

}  // namespace

TEST_CASE("three-class fixture: classes and reversibility flags") {
  auto net = parse_network(fixtures::kThreeClasses);
  auto classes = linkage_classes(net);
  REQUIRE(classes.size() == 3);

  int reversible = 0;
  for (const auto& cls : classes) {
    if (!cls.weakly_reversible) continue;
    ++reversible;
    auto formulas = class_formulas(net, cls);
    CHECK(std::count(formulas.begin(), formulas.end(), "A + B") == 1);
    CHECK(std::count(formulas.begin(), formulas.end(), "2 C") == 1);
    CHECK(std::count(formulas.begin(), formulas.end(), "D") == 1);
  }
  CHECK(reversible == 1);
}

TEST_CASE("enzyme fixture: one class, not weakly reversible") {
  auto net = parse_network(fixtures::kEnzyme);
  auto classes = linkage_classes(net);
  REQUIRE(classes.size() == 1);
  CHECK_FALSE(classes[0].weakly_reversible);

  auto single = parse_network("A -> B @ 1\n");
  auto sc = linkage_classes(single);
  REQUIRE(sc.size() == 1);
  CHECK_FALSE(sc[0].weakly_reversible);
}

TEST_CASE("linkage classes partition the complex set") {
  SplitMix64 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    auto net = testgen::random_binary_network(rng);
    auto classes = linkage_classes(net);
    std::vector<int> seen(net.complexes().size(), 0);
    std::vector<int> seen_rxn(net.reactions().size(), 0);
    for (const auto& cls : classes) {
      for (int i : cls.complex_indices) ++seen[i];
      for (int j : cls.reaction_indices) ++seen_rxn[j];
      CHECK(cls.weakly_reversible == oracle::brute_force_weakly_reversible(net, cls));
    }
    for (int count : seen) CHECK(count == 1);
    for (int count : seen_rxn) CHECK(count == 1);
  }
}

TEST_CASE("complex classification") {
  CHECK(classify_complex(Complex::zero()) == ComplexKind::Zero);
  CHECK(classify_complex(Complex::unary(3)) == ComplexKind::Unary);
  CHECK(classify_complex(Complex::twice(1)) == ComplexKind::Double);
  CHECK(classify_complex(Complex::pair(0, 2)) == ComplexKind::Binary);

  Complex big;
  big.add_term(0, 3);
  CHECK_THROWS_AS(classify_complex(big), NotBinaryComplex);
}

TEST_CASE("structure predicates on the fixtures") {
  auto escape = parse_network(fixtures::kDoubleFullEscape);
  CHECK(is_binary(escape));
  CHECK(is_double_full(escape));

  auto enzyme = parse_network(fixtures::kEnzyme);
  CHECK(is_binary(enzyme));
  CHECK_FALSE(is_double_full(enzyme));
  CHECK_FALSE(has_all_flows(enzyme));

  auto ternary = parse_network("3A -> B @ 1\n");
  CHECK_FALSE(is_binary(ternary));

  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto net = testgen::random_binary_network(rng);
    std::vector<double> ones(net.species_count(), 1.0);
    CHECK(has_all_flows(augment_flows(net, ones, ones)));

    auto df = testgen::random_double_full_network(rng);
    CHECK(is_double_full(df));
    for (SpeciesId i = 0; i < df.species_count(); ++i)
      CHECK(classify_complex(df.complexes()[df.complex_index(Complex::twice(i))]) ==
            ComplexKind::Double);
  }
}

TEST_CASE("directed path queries") {
  auto net = parse_network(fixtures::kDoubleFullEscape);

  // 2C escapes in one hop through 2C -> A.
  auto path = directed_path(net, net.complex_index(Complex::twice(2)), unary_or_zero);
  REQUIRE(path.has_value());
  REQUIRE(path->size() == 1);
  CHECK(net.reaction_name((*path)[0]) == "2 C -> A");

  // A zero-length path when the start already qualifies.
  auto trivial = directed_path(net, net.complex_index(Complex::unary(0)), unary_or_zero);
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());

  // No escape from 2B in the covered-split fixture.
  auto covered = parse_network(fixtures::kSplitCovered);
  auto blocked = directed_path(covered, covered.complex_index(Complex::twice(1)), unary_or_zero);
  CHECK_FALSE(blocked.has_value());
}

TEST_CASE("directed path edges are reactions and reach the target") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto net = testgen::random_binary_network(rng);
    int from = static_cast<int>(rng.next_u64() % net.complexes().size());
    auto path = directed_path(net, from, unary_or_zero);
    if (!path) {
      // Brute-force: no unary-or-zero complex reachable from `from`.
      std::set<int> reached{from};
      std::vector<int> frontier{from};
      while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (int j : net.outgoing()[v]) {
          int w = net.product_index(j);
          if (reached.insert(w).second) frontier.push_back(w);
        }
      }
      for (int v : reached) CHECK_FALSE(unary_or_zero(net.complexes()[v]));
      continue;
    }
    int at = from;
    for (int j : *path) {
      CHECK(net.source_index(j) == at);
      at = net.product_index(j);
    }
    CHECK(unary_or_zero(net.complexes()[at]));
  }
}

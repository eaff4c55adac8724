#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Connected component of the reaction graph. `weakly_reversible` is true
/// iff the induced directed graph is strongly connected.
struct LinkageClass {
  std::vector<int> complex_indices;   // ascending
  std::vector<int> reaction_indices;  // ascending
  bool weakly_reversible = false;
};

enum class ComplexKind { Zero, Unary, Binary, Double };

struct NotBinaryComplex : std::domain_error {
  using std::domain_error::domain_error;
};

/// Partition of the complex set into linkage classes, ordered by smallest
/// complex index.
std::vector<LinkageClass> linkage_classes(const ReactionNetwork& net);

/// Zero (order 0), Unary (order 1), Double (2 S_i) or Binary (S_i + S_j,
/// i != j). Throws NotBinaryComplex for order > 2.
ComplexKind classify_complex(const Complex& y);

/// Every complex has total stoichiometry <= 2.
bool is_binary(const ReactionNetwork& net);

/// Every species S_i has the double complex 2 S_i in the complex set.
bool is_double_full(const ReactionNetwork& net);

/// Both 0 -> S and S -> 0 are present for every species.
bool has_all_flows(const ReactionNetwork& net);

/// Shortest directed path (breadth-first, ties broken by reaction-list
/// order) from the complex at `from_index` to any complex satisfying
/// `target`. Returns the reaction indices along the path; an empty list
/// when `from` itself satisfies `target`; nullopt when unreachable.
std::optional<std::vector<int>> directed_path(const ReactionNetwork& net, int from_index,
                                              const std::function<bool(const Complex&)>& target);

/// Convenience target: unary or zero complex (total stoichiometry <= 1).
bool unary_or_zero(const Complex& y);

}  // namespace crn

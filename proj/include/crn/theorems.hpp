#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/graph.hpp"
#include "crn/network.hpp"

namespace crn {

/// Structural positive-recurrence criteria. Each has a decidable hypothesis
/// on the reaction graph; a passing check certifies stability of the
/// mass-action Markov process for every choice of rate constants.
enum class Criterion {
  /// Weakly reversible binary single-linkage-class core plus all in/out-flows:
  /// every state is positive recurrent.
  SingleLinkageFlows,
  /// Double-full binary network with a directed escape path from every
  /// double complex to a unary or zero complex.
  DoubleFullPaths,
  /// Double-full binary network where the doubles without escape paths are
  /// covered by weakly reversible all-binary classes carrying pair-escape
  /// witnesses.
  DoubleFullSplit,
  /// Weakly reversible double-full binary network split into all-binary
  /// classes whose species pair up into complexes of the mixed classes:
  /// every state is positive recurrent.
  ReversibleBinarySplit,
  /// Double-full binary network split into weakly reversible all-binary
  /// classes, each with an out-flow species, the rest free of binary
  /// complexes.
  DoubleFullOutflows,
};

const char* criterion_id(Criterion c);

/// Escape path witness: reactions from a starting complex to the first
/// complex of order <= 1. Empty path means the start already qualifies.
struct PathWitness {
  int from_complex = -1;
  std::vector<int> reactions;
};

/// Witness for one selected class of a DoubleFullSplit certificate: a
/// species pair from the class whose sum complex exists and escapes.
struct SplitClassWitness {
  int class_index = -1;
  SpeciesId s1 = -1, s2 = -1;
  int pair_complex = -1;
  std::vector<int> path;
};

struct Certificate {
  Criterion criterion{};
  bool holds = false;
  std::string failure_reason;  // nonempty iff !holds; names the violated hypothesis

  // SingleLinkageFlows: reaction indices of the core and of the flows.
  std::vector<int> base_reactions;
  std::vector<int> flow_reactions;

  // Escape paths per double complex (DoubleFullPaths, and the path branch
  // of DoubleFullSplit).
  std::vector<PathWitness> double_paths;

  // Class splits: indices into linkage_classes(net) of the selected
  // (weakly reversible, all-binary) classes; split_size is m.
  std::vector<int> selected_classes;
  int split_size = 0;

  std::vector<SplitClassWitness> class_witnesses;  // DoubleFullSplit

  // DoubleFullOutflows: per selected class, the species with an out-flow.
  std::vector<std::pair<int, SpeciesId>> outflow_witnesses;

  // ReversibleBinarySplit: per selected class, (s1, s2, complex index of
  // s1+s2 inside an unselected class).
  std::vector<SplitClassWitness> pair_witnesses;
};

Certificate check_single_linkage_flows(const ReactionNetwork& net);
Certificate check_double_full_paths(const ReactionNetwork& net);
Certificate check_double_full_split(const ReactionNetwork& net);
Certificate check_reversible_binary_split(const ReactionNetwork& net);
Certificate check_double_full_outflows(const ReactionNetwork& net);

struct VerdictSummary {
  std::vector<Certificate> certificates;  // all five, fixed order
  bool any_holds = false;
  std::optional<Criterion> strongest;
  std::string conclusion;
};

/// Runs all five checkers and summarizes the strongest conclusion:
/// every-state positive recurrence when a flows/reversible-split criterion
/// holds, the closed-component statement for the double-full family, and a
/// conjecture note for weakly reversible networks passing nothing.
VerdictSummary best_verdict(const ReactionNetwork& net);

}  // namespace crn

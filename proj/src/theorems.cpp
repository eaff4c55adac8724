#include "crn/theorems.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace crn {

namespace {

constexpr int kMaxSplitClasses = 20;

bool is_flow_reaction(const Reaction& r) {
  return (r.source.is_zero() && r.product.order() == 1) ||
         (r.source.order() == 1 && r.product.is_zero());
}

std::string class_name(const ReactionNetwork& net, const LinkageClass& cls) {
  std::string out = "{";
  for (std::size_t i = 0; i < cls.complex_indices.size(); ++i) {
    if (i) out += ", ";
    out += net.complex_name(net.complexes()[cls.complex_indices[i]]);
  }
  return out + "}";
}

std::vector<SpeciesId> class_species(const ReactionNetwork& net, const LinkageClass& cls) {
  std::set<SpeciesId> out;
  for (int ci : cls.complex_indices)
    for (const auto& [id, c] : net.complexes()[ci].terms()) out.insert(id);
  return {out.begin(), out.end()};
}

bool all_binary_complexes(const ReactionNetwork& net, const LinkageClass& cls) {
  for (int ci : cls.complex_indices)
    if (net.complexes()[ci].order() != 2) return false;
  return true;
}

bool has_binary_complex(const ReactionNetwork& net, const LinkageClass& cls) {
  for (int ci : cls.complex_indices)
    if (net.complexes()[ci].order() == 2) return true;
  return false;
}

/// First species (by index) lacking a flow, or nullopt. in=true checks
/// 0 -> S, else S -> 0.
std::optional<SpeciesId> first_missing_flow(const ReactionNetwork& net, bool in) {
  std::set<std::pair<Complex, Complex>> present;
  for (const auto& r : net.reactions()) present.insert({r.source, r.product});
  for (SpeciesId i = 0; i < net.species_count(); ++i) {
    Complex s = Complex::unary(i);
    auto key = in ? std::make_pair(Complex::zero(), s) : std::make_pair(s, Complex::zero());
    if (!present.count(key)) return i;
  }
  return std::nullopt;
}

/// Checks is_binary / is_double_full with a concrete reason on failure.
bool binary_double_full_gate(const ReactionNetwork& net, bool need_double_full,
                             std::string& reason) {
  for (const auto& y : net.complexes())
    if (y.order() > 2) {
      reason = "not binary: complex " + net.complex_name(y) + " has order " +
               std::to_string(y.order());
      return false;
    }
  if (need_double_full) {
    for (SpeciesId i = 0; i < net.species_count(); ++i)
      if (net.complex_index(Complex::twice(i)) < 0) {
        reason = "not double-full: double complex 2 " + net.species()[i] + " is absent";
        return false;
      }
  }
  return true;
}

/// Enumerates subsets of {0,...,l-1} by increasing size, then by mask.
std::vector<unsigned> subset_masks_by_size(int l, bool include_full) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << l); ++m)
    if (include_full || m != (1u << l) - 1) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

}  // namespace

const char* criterion_id(Criterion c) {
  switch (c) {
    case Criterion::SingleLinkageFlows:
      return "single_linkage_with_flows";
    case Criterion::DoubleFullPaths:
      return "double_full_with_escape_paths";
    case Criterion::DoubleFullSplit:
      return "double_full_with_class_split";
    case Criterion::ReversibleBinarySplit:
      return "reversible_binary_class_split";
    case Criterion::DoubleFullOutflows:
      return "double_full_with_outflows";
  }
  return "?";
}

Certificate check_single_linkage_flows(const ReactionNetwork& net) {
  Certificate cert;
  cert.criterion = Criterion::SingleLinkageFlows;

  if (auto missing = first_missing_flow(net, true)) {
    cert.failure_reason = "missing in-flow for " + net.species()[*missing];
    return cert;
  }
  if (auto missing = first_missing_flow(net, false)) {
    cert.failure_reason = "missing out-flow for " + net.species()[*missing];
    return cert;
  }

  std::vector<Reaction> base;
  for (std::size_t j = 0; j < net.reactions().size(); ++j) {
    if (is_flow_reaction(net.reactions()[j])) {
      cert.flow_reactions.push_back(static_cast<int>(j));
    } else {
      cert.base_reactions.push_back(static_cast<int>(j));
      base.push_back(net.reactions()[j]);
    }
  }
  if (base.empty()) {
    cert.failure_reason = "no reactions besides in/out-flows";
    return cert;
  }

  ReactionNetwork base_net(net.species(), std::move(base));
  auto classes = linkage_classes(base_net);
  if (classes.size() != 1) {
    cert.failure_reason = "base network has " + std::to_string(classes.size()) +
                          " linkage classes";
    return cert;
  }
  if (!classes.front().weakly_reversible) {
    cert.failure_reason = "base network is not weakly reversible";
    return cert;
  }
  if (!is_binary(base_net)) {
    cert.failure_reason = "base network is not binary";
    return cert;
  }
  cert.holds = true;
  return cert;
}

Certificate check_double_full_paths(const ReactionNetwork& net) {
  Certificate cert;
  cert.criterion = Criterion::DoubleFullPaths;
  if (!binary_double_full_gate(net, true, cert.failure_reason)) return cert;

  for (SpeciesId i = 0; i < net.species_count(); ++i) {
    int from = net.complex_index(Complex::twice(i));
    auto path = directed_path(net, from, unary_or_zero);
    if (!path) {
      cert.failure_reason = "no directed path from 2 " + net.species()[i] +
                            " to a unary or zero complex";
      return cert;
    }
    cert.double_paths.push_back({from, std::move(*path)});
  }
  cert.holds = true;
  return cert;
}

Certificate check_double_full_split(const ReactionNetwork& net) {
  Certificate cert;
  cert.criterion = Criterion::DoubleFullSplit;
  if (!binary_double_full_gate(net, true, cert.failure_reason)) return cert;

  auto classes = linkage_classes(net);
  const int l = static_cast<int>(classes.size());
  if (l > kMaxSplitClasses)
    throw BudgetError("class-split search limited to " + std::to_string(kMaxSplitClasses) +
                      " linkage classes, network has " + std::to_string(l));

  // Per-class eligibility: weakly reversible, only binary complexes, and a
  // species pair S + S~ (S = S~ allowed) present in the complex set with an
  // escape path to a unary or zero complex.
  std::vector<bool> eligible(l, false);
  std::vector<SplitClassWitness> witness(l);
  std::vector<std::string> why_not(l);
  for (int k = 0; k < l; ++k) {
    if (!classes[k].weakly_reversible) {
      why_not[k] = "is not weakly reversible";
      continue;
    }
    if (!all_binary_complexes(net, classes[k])) {
      why_not[k] = "contains a non-binary complex";
      continue;
    }
    auto species = class_species(net, classes[k]);
    bool found = false;
    for (std::size_t a = 0; a < species.size() && !found; ++a)
      for (std::size_t b = a; b < species.size() && !found; ++b) {
        Complex pair = species[a] == species[b] ? Complex::twice(species[a])
                                                : Complex::pair(species[a], species[b]);
        int ci = net.complex_index(pair);
        if (ci < 0) continue;
        auto path = directed_path(net, ci, unary_or_zero);
        if (!path) continue;
        witness[k] = {k, species[a], species[b], ci, std::move(*path)};
        found = true;
      }
    if (!found) {
      why_not[k] = "has no species pair whose sum complex escapes to a unary or zero complex";
      continue;
    }
    eligible[k] = true;
  }

  // Escape paths and owning class per double complex.
  const SpeciesId d = net.species_count();
  std::vector<std::optional<std::vector<int>>> escape(d);
  std::vector<int> owner(d, -1);
  for (SpeciesId i = 0; i < d; ++i) {
    int ci = net.complex_index(Complex::twice(i));
    escape[i] = directed_path(net, ci, unary_or_zero);
    for (int k = 0; k < l; ++k)
      if (std::binary_search(classes[k].complex_indices.begin(),
                             classes[k].complex_indices.end(), ci))
        owner[i] = k;
  }

  for (unsigned mask : subset_masks_by_size(l, false)) {
    bool ok = true;
    for (int k = 0; k < l && ok; ++k)
      if ((mask >> k) & 1) ok = eligible[k];
    for (SpeciesId i = 0; i < d && ok; ++i)
      if (!escape[i] && !((mask >> owner[i]) & 1)) ok = false;
    if (!ok) continue;

    cert.holds = true;
    cert.split_size = std::popcount(mask);
    for (int k = 0; k < l; ++k)
      if ((mask >> k) & 1) {
        cert.selected_classes.push_back(k);
        cert.class_witnesses.push_back(witness[k]);
      }
    for (SpeciesId i = 0; i < d; ++i)
      if (escape[i])
        cert.double_paths.push_back({net.complex_index(Complex::twice(i)), *escape[i]});
    return cert;
  }

  // No split works: some double complex lacks an escape path and sits in an
  // ineligible class.
  for (SpeciesId i = 0; i < d; ++i)
    if (!escape[i] && !eligible[owner[i]]) {
      cert.failure_reason = "double complex 2 " + net.species()[i] +
                            " has no escape path, and its linkage class " +
                            class_name(net, classes[owner[i]]) + " " + why_not[owner[i]];
      return cert;
    }
  cert.failure_reason = "no admissible split of the linkage classes";
  return cert;
}

Certificate check_reversible_binary_split(const ReactionNetwork& net) {
  Certificate cert;
  cert.criterion = Criterion::ReversibleBinarySplit;

  auto classes = linkage_classes(net);
  for (const auto& cls : classes)
    if (!cls.weakly_reversible) {
      cert.failure_reason = "not weakly reversible: linkage class " + class_name(net, cls) +
                            " is not strongly connected";
      return cert;
    }
  if (!binary_double_full_gate(net, true, cert.failure_reason)) return cert;

  // The selected classes must be exactly the all-binary ones; every other
  // class must contribute a non-binary complex, and both sides must be
  // nonempty.
  std::vector<int> selected, rest;
  for (int k = 0; k < static_cast<int>(classes.size()); ++k)
    (all_binary_complexes(net, classes[k]) ? selected : rest).push_back(k);
  if (selected.empty()) {
    cert.failure_reason = "no linkage class contains only binary complexes";
    return cert;
  }
  if (rest.empty()) {
    cert.failure_reason = "every linkage class contains only binary complexes; "
                          "no class is left for the complement";
    return cert;
  }

  for (int k : selected) {
    auto species = class_species(net, classes[k]);
    bool found = false;
    SplitClassWitness w;
    for (std::size_t a = 0; a < species.size() && !found; ++a)
      for (std::size_t b = a; b < species.size() && !found; ++b) {
        Complex pair = species[a] == species[b] ? Complex::twice(species[a])
                                                : Complex::pair(species[a], species[b]);
        int ci = net.complex_index(pair);
        if (ci < 0) continue;
        for (int j : rest)
          if (std::binary_search(classes[j].complex_indices.begin(),
                                 classes[j].complex_indices.end(), ci)) {
            w = {k, species[a], species[b], ci, {}};
            found = true;
            break;
          }
      }
    if (!found) {
      cert.failure_reason = "class " + class_name(net, classes[k]) +
                            " has no species pair forming a complex of a non-binary class";
      return cert;
    }
    cert.pair_witnesses.push_back(w);
    cert.selected_classes.push_back(k);
  }
  cert.split_size = static_cast<int>(selected.size());
  cert.holds = true;
  return cert;
}

Certificate check_double_full_outflows(const ReactionNetwork& net) {
  Certificate cert;
  cert.criterion = Criterion::DoubleFullOutflows;
  if (!binary_double_full_gate(net, true, cert.failure_reason)) return cert;

  auto classes = linkage_classes(net);
  const int l = static_cast<int>(classes.size());
  if (l > kMaxSplitClasses)
    throw BudgetError("class-split search limited to " + std::to_string(kMaxSplitClasses) +
                      " linkage classes, network has " + std::to_string(l));

  std::set<SpeciesId> outflow_species;
  for (const auto& r : net.reactions())
    if (r.product.is_zero() && r.source.order() == 1)
      outflow_species.insert(r.source.terms().front().first);

  std::vector<bool> eligible(l, false), binary_free(l, false);
  std::vector<SpeciesId> out_witness(l, -1);
  std::vector<std::string> why_not(l);
  for (int k = 0; k < l; ++k) {
    binary_free[k] = !has_binary_complex(net, classes[k]);
    if (!classes[k].weakly_reversible) {
      why_not[k] = "is not weakly reversible";
      continue;
    }
    if (!all_binary_complexes(net, classes[k])) {
      why_not[k] = "mixes binary and non-binary complexes";
      continue;
    }
    for (SpeciesId s : class_species(net, classes[k]))
      if (outflow_species.count(s)) {
        out_witness[k] = s;
        break;
      }
    if (out_witness[k] < 0) {
      why_not[k] = "has no out-flow species";
      continue;
    }
    eligible[k] = true;
  }

  for (unsigned mask : subset_masks_by_size(l, false)) {
    if (mask == 0) continue;  // at least one class on the binary side
    bool ok = true;
    for (int k = 0; k < l && ok; ++k)
      ok = ((mask >> k) & 1) ? eligible[k] : binary_free[k];
    if (!ok) continue;

    cert.holds = true;
    cert.split_size = std::popcount(mask);
    for (int k = 0; k < l; ++k)
      if ((mask >> k) & 1) {
        cert.selected_classes.push_back(k);
        cert.outflow_witnesses.push_back({k, out_witness[k]});
      }
    return cert;
  }

  // Classes holding a binary complex must be selected; report the first
  // such class that cannot be.
  for (int k = 0; k < l; ++k)
    if (has_binary_complex(net, classes[k]) && !eligible[k]) {
      cert.failure_reason =
          "linkage class " + class_name(net, classes[k]) + " " + why_not[k];
      return cert;
    }
  cert.failure_reason = "no admissible split of the linkage classes";
  return cert;
}

VerdictSummary best_verdict(const ReactionNetwork& net) {
  VerdictSummary out;
  out.certificates.push_back(check_single_linkage_flows(net));
  out.certificates.push_back(check_double_full_paths(net));
  out.certificates.push_back(check_double_full_split(net));
  out.certificates.push_back(check_reversible_binary_split(net));
  out.certificates.push_back(check_double_full_outflows(net));

  auto holds = [&](Criterion c) {
    for (const auto& cert : out.certificates)
      if (cert.criterion == c && cert.holds) return true;
    return false;
  };
  for (const auto& cert : out.certificates) out.any_holds |= cert.holds;

  if (holds(Criterion::SingleLinkageFlows)) {
    out.strongest = Criterion::SingleLinkageFlows;
  } else if (holds(Criterion::ReversibleBinarySplit)) {
    out.strongest = Criterion::ReversibleBinarySplit;
  } else {
    for (Criterion c : {Criterion::DoubleFullPaths, Criterion::DoubleFullSplit,
                        Criterion::DoubleFullOutflows})
      if (holds(c) && !out.strongest) out.strongest = c;
  }

  if (out.strongest == Criterion::SingleLinkageFlows ||
      out.strongest == Criterion::ReversibleBinarySplit) {
    out.conclusion =
        "every state of the mass-action Markov process is positive recurrent, "
        "for any choice of rate constants";
  } else if (out.strongest) {
    out.conclusion =
        "every state in a closed irreducible component is positive recurrent, and "
        "the expected time to enter such a component is finite, for any choice of "
        "rate constants";
  } else {
    bool wr = true;
    for (const auto& cls : linkage_classes(net)) wr &= cls.weakly_reversible;
    if (wr) {
      out.conclusion =
          "no structural criterion applies; the network is weakly reversible, for "
          "which positive recurrence of every state is conjectured (Positive "
          "Recurrence Conjecture) but not certified here";
    } else {
      out.conclusion = "no structural criterion applies";
    }
  }
  return out;
}

}  // namespace crn

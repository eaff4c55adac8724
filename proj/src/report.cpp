#include "crn/report.hpp"

#include <cstdio>
#include <sstream>

#include "crn/graph.hpp"

namespace crn {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

const char* kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::Zero:
      return "zero";
    case ComplexKind::Unary:
      return "unary";
    case ComplexKind::Binary:
      return "binary";
    case ComplexKind::Double:
      return "double";
  }
  return "?";
}

Json complex_list(const ReactionNetwork& net, const std::vector<int>& indices) {
  Json arr = Json::array();
  for (int i : indices) arr.push_back(net.complex_name(net.complexes()[i]));
  return arr;
}

Json reaction_list(const ReactionNetwork& net, const std::vector<int>& indices) {
  Json arr = Json::array();
  for (int j : indices) arr.push_back(net.reaction_name(j));
  return arr;
}

}  // namespace

std::string format_state(const ReactionNetwork& net, const State& x) {
  (void)net;
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(x[i]);
  }
  return out;
}

Json network_summary_json(const ReactionNetwork& net) {
  Json j;
  j["species"] = net.species();
  j["reaction_count"] = net.reactions().size();

  Json complexes = Json::array();
  for (const auto& y : net.complexes()) {
    Json entry;
    entry["formula"] = net.complex_name(y);
    entry["order"] = y.order();
    if (y.order() <= 2) entry["kind"] = kind_name(classify_complex(y));
    complexes.push_back(entry);
  }
  j["complexes"] = complexes;

  auto classes = linkage_classes(net);
  Json class_arr = Json::array();
  bool all_wr = true;
  for (const auto& cls : classes) {
    Json entry;
    entry["complexes"] = complex_list(net, cls.complex_indices);
    entry["weakly_reversible"] = cls.weakly_reversible;
    all_wr &= cls.weakly_reversible;
    class_arr.push_back(entry);
  }
  j["linkage_classes"] = class_arr;
  j["binary"] = is_binary(net);
  j["double_full"] = is_double_full(net);
  j["weakly_reversible"] = all_wr;
  j["has_all_flows"] = has_all_flows(net);
  return j;
}

Json certificate_json(const ReactionNetwork& net, const Certificate& cert) {
  Json j;
  j["criterion"] = criterion_id(cert.criterion);
  j["holds"] = cert.holds;
  if (!cert.holds) {
    j["failure_reason"] = cert.failure_reason;
    return j;
  }

  Json witness;
  switch (cert.criterion) {
    case Criterion::SingleLinkageFlows:
      witness["base_reactions"] = reaction_list(net, cert.base_reactions);
      witness["flow_reactions"] = reaction_list(net, cert.flow_reactions);
      break;
    case Criterion::DoubleFullPaths: {
      Json paths = Json::array();
      for (const auto& p : cert.double_paths) {
        Json e;
        e["from"] = net.complex_name(net.complexes()[p.from_complex]);
        e["path"] = reaction_list(net, p.reactions);
        paths.push_back(e);
      }
      witness["escape_paths"] = paths;
      break;
    }
    case Criterion::DoubleFullSplit: {
      witness["split_size"] = cert.split_size;
      Json classes = Json::array();
      for (const auto& w : cert.class_witnesses) {
        Json e;
        e["class_index"] = w.class_index;
        e["species_pair"] = Json::array({net.species()[w.s1], net.species()[w.s2]});
        e["pair_complex"] = net.complex_name(net.complexes()[w.pair_complex]);
        e["escape_path"] = reaction_list(net, w.path);
        classes.push_back(e);
      }
      witness["selected_classes"] = classes;
      Json paths = Json::array();
      for (const auto& p : cert.double_paths) {
        Json e;
        e["from"] = net.complex_name(net.complexes()[p.from_complex]);
        e["path"] = reaction_list(net, p.reactions);
        paths.push_back(e);
      }
      witness["double_escape_paths"] = paths;
      break;
    }
    case Criterion::ReversibleBinarySplit: {
      witness["split_size"] = cert.split_size;
      Json classes = Json::array();
      for (const auto& w : cert.pair_witnesses) {
        Json e;
        e["class_index"] = w.class_index;
        e["species_pair"] = Json::array({net.species()[w.s1], net.species()[w.s2]});
        e["pair_complex"] = net.complex_name(net.complexes()[w.pair_complex]);
        classes.push_back(e);
      }
      witness["selected_classes"] = classes;
      break;
    }
    case Criterion::DoubleFullOutflows: {
      witness["split_size"] = cert.split_size;
      Json classes = Json::array();
      for (const auto& [cls, sp] : cert.outflow_witnesses) {
        Json e;
        e["class_index"] = cls;
        e["outflow_species"] = net.species()[sp];
        classes.push_back(e);
      }
      witness["selected_classes"] = classes;
      break;
    }
  }
  j["witness"] = witness;
  return j;
}

Json verdict_json(const ReactionNetwork& net, const VerdictSummary& verdict) {
  Json j;
  Json certs = Json::array();
  for (const auto& cert : verdict.certificates) certs.push_back(certificate_json(net, cert));
  j["certificates"] = certs;
  Json summary;
  summary["any_criterion_holds"] = verdict.any_holds;
  summary["strongest"] =
      verdict.strongest ? Json(criterion_id(*verdict.strongest)) : Json(nullptr);
  summary["conclusion"] = verdict.conclusion;
  j["summary"] = summary;
  return j;
}

Json tier_report_json(const ReactionNetwork& net, const TierReport& report) {
  Json j;
  Json d_tiers = Json::array();
  for (std::size_t i = 0; i < report.d_tiers.size(); ++i) {
    Json tier;
    tier["degree"] = report.d_degrees[i].to_string();
    tier["complexes"] = complex_list(net, report.d_tiers[i]);
    d_tiers.push_back(tier);
  }
  j["d_tiers"] = d_tiers;
  Json s_tiers = Json::array();
  for (const auto& tier : report.s_tiers) s_tiers.push_back(complex_list(net, tier));
  j["s_tiers"] = s_tiers;
  j["s_infinity"] = complex_list(net, report.s_infinity);
  j["descending_reactions"] = reaction_list(net, report.descending_reactions);
  j["descending_sources"] = complex_list(net, report.descending_sources);
  j["top_s_tier_has_descending_source"] = report.top_s_tier_has_descending_source;
  j["top_tiers_equal_and_descending"] = report.top_tiers_equal_and_descending;
  return j;
}

Json counterexample_search_json(const ReactionNetwork& net,
                                const CounterexampleSearch& search) {
  Json j;
  j["assignments_tested"] = search.assignments_tested;
  j["distinct_structures"] = search.distinct_structures;
  j["counterexample_found"] = search.found;
  if (search.found) {
    j["sequence"] = search.sequence.to_string(net);
    j["tier_report"] = tier_report_json(net, search.report);
  } else {
    j["note"] =
        "no counterexample in the tested family; this is evidence over the "
        "family only, not a proof over all tier sequences";
  }
  return j;
}

Json drift_report_json(const ReactionNetwork& net, const DriftReport& report) {
  Json j;
  j["lyapunov"] = report.lyapunov.to_string();
  j["r_max"] = report.r_max;
  j["verdict"] = report.verdict == DriftReport::Verdict::ConfirmedUpToRmax
                     ? "drift_confirmed_up_to_r_max"
                     : "drift_violated";
  if (report.verdict == DriftReport::Verdict::ConfirmedUpToRmax) {
    j["exception_bound"] = report.exception_bound;
  } else {
    j["violation_state"] = format_state(net, report.violation_state);
    j["violation_value"] = report.violation_value;
  }
  Json shells = Json::array();
  for (const auto& s : report.shells) {
    Json e;
    e["radius"] = s.radius;
    e["max_value"] = s.max_value;
    e["argmax"] = format_state(net, s.argmax);
    shells.push_back(e);
  }
  j["shells"] = shells;
  return j;
}

Json analysis_report_json(const ReactionNetwork& net, const VerdictSummary& verdict,
                          const std::string& input_path, std::string_view input_text) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = kToolName;
  j["tool_version"] = kToolVersion;
  Json input;
  input["path"] = input_path;
  input["digest_fnv1a64"] = hex64(fnv1a64(input_text));
  j["input"] = input;
  j["network"] = network_summary_json(net);
  Json v = verdict_json(net, verdict);
  j["certificates"] = v["certificates"];
  j["summary"] = v["summary"];
  return j;
}

std::string render_verdict_text(const ReactionNetwork& net, const VerdictSummary& verdict) {
  std::ostringstream out;
  auto classes = linkage_classes(net);
  out << "network: " << net.species().size() << " species, " << net.reactions().size()
      << " reactions, " << net.complexes().size() << " complexes, " << classes.size()
      << " linkage class" << (classes.size() == 1 ? "" : "es") << "\n";
  out << "flags: binary=" << (is_binary(net) ? "yes" : "no")
      << " double_full=" << (is_double_full(net) ? "yes" : "no") << " weakly_reversible=";
  bool wr = true;
  for (const auto& cls : classes) wr &= cls.weakly_reversible;
  out << (wr ? "yes" : "no") << " all_flows=" << (has_all_flows(net) ? "yes" : "no") << "\n";
  for (const auto& cert : verdict.certificates) {
    out << "  [" << (cert.holds ? "holds" : "fails") << "] " << criterion_id(cert.criterion);
    if (!cert.holds) out << " -- " << cert.failure_reason;
    if (cert.holds && (cert.criterion == Criterion::DoubleFullSplit ||
                       cert.criterion == Criterion::ReversibleBinarySplit ||
                       cert.criterion == Criterion::DoubleFullOutflows))
      out << " (m = " << cert.split_size << ")";
    out << "\n";
  }
  out << "conclusion: " << verdict.conclusion << "\n";
  return out.str();
}

std::string render_tier_text(const ReactionNetwork& net, const TierReport& report) {
  std::ostringstream out;
  out << "D-type tiers (by decreasing degree):\n";
  for (std::size_t i = 0; i < report.d_tiers.size(); ++i) {
    out << "  " << i + 1 << " (degree " << report.d_degrees[i].to_string() << "): ";
    for (std::size_t k = 0; k < report.d_tiers[i].size(); ++k)
      out << (k ? ", " : "") << net.complex_name(net.complexes()[report.d_tiers[i][k]]);
    out << "\n";
  }
  out << "S-type tiers:\n";
  for (std::size_t i = 0; i < report.s_tiers.size(); ++i) {
    out << "  " << i + 1 << ": ";
    for (std::size_t k = 0; k < report.s_tiers[i].size(); ++k)
      out << (k ? ", " : "") << net.complex_name(net.complexes()[report.s_tiers[i][k]]);
    out << "\n";
  }
  out << "  infinity: ";
  for (std::size_t k = 0; k < report.s_infinity.size(); ++k)
    out << (k ? ", " : "") << net.complex_name(net.complexes()[report.s_infinity[k]]);
  out << "\n";
  out << "descending reactions: ";
  for (std::size_t k = 0; k < report.descending_reactions.size(); ++k)
    out << (k ? "; " : "") << net.reaction_name(report.descending_reactions[k]);
  out << "\n";
  out << "top S-tier has descending source: "
      << (report.top_s_tier_has_descending_source ? "yes" : "no") << "\n";
  out << "top tiers equal with descending set nonempty: "
      << (report.top_tiers_equal_and_descending ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace crn

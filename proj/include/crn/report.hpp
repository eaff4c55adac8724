#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "crn/drift.hpp"
#include "crn/network.hpp"
#include "crn/theorems.hpp"
#include "crn/tiers.hpp"

namespace crn {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "crnstab";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit digest; identifies report inputs in a stable way.
std::uint64_t fnv1a64(std::string_view data);

Json network_summary_json(const ReactionNetwork& net);
Json certificate_json(const ReactionNetwork& net, const Certificate& cert);
Json verdict_json(const ReactionNetwork& net, const VerdictSummary& verdict);
Json tier_report_json(const ReactionNetwork& net, const TierReport& report);
Json counterexample_search_json(const ReactionNetwork& net, const CounterexampleSearch& search);
Json drift_report_json(const ReactionNetwork& net, const DriftReport& report);

/// Shell of the full analysis report; callers attach optional sections.
Json analysis_report_json(const ReactionNetwork& net, const VerdictSummary& verdict,
                          const std::string& input_path, std::string_view input_text);

std::string render_verdict_text(const ReactionNetwork& net, const VerdictSummary& verdict);
std::string render_tier_text(const ReactionNetwork& net, const TierReport& report);

std::string format_state(const ReactionNetwork& net, const State& x);

}  // namespace crn

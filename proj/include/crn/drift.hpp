#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Lyapunov function selector.
///   Entropy:          V(x) = sum_i v(x_i), v(x) = x(ln x - 1) + 1 on the
///                     non-negative integers (0 ln 0 = 0) and 1 otherwise.
///   Linear:           W(x) = sum_i x_i.
///   Power:            T(x) = (sum_i x_i)^(2+delta), 0 < delta < 1.
///   EntropyPlusPower: V + T.
struct LyapunovSpec {
  enum class Kind { Entropy, Linear, Power, EntropyPlusPower };

  Kind kind = Kind::Entropy;
  double delta = 0.5;

  static LyapunovSpec entropy() { return {Kind::Entropy, 0.0}; }
  static LyapunovSpec linear() { return {Kind::Linear, 0.0}; }
  static LyapunovSpec power(double delta);
  static LyapunovSpec entropy_plus_power(double delta);

  std::string to_string() const;
};

/// v(x) for a single (possibly shifted, possibly negative) coordinate.
double entropy_term(std::int64_t x);

/// V at a state or shifted integer vector. Negative coordinates score 1 in
/// the entropy part; a negative total scores 0 in the power part (such
/// vectors only arise where the matching intensity vanishes).
double lyapunov_value(const LyapunovSpec& spec, const State& x);

/// Generator applied to V at x: the exact finite sum over reactions of
/// intensity(x) * (V(x + y' - y) - V(x)). Zero-intensity terms are skipped
/// before V is evaluated at the shifted state.
double generator_apply(const ReactionNetwork& net, const LyapunovSpec& spec, const State& x);

struct ShellStat {
  std::int64_t radius = 0;
  double max_value = 0.0;  // max of AV over the shell sum(x) = radius
  State argmax;
};

struct DriftReport {
  LyapunovSpec lyapunov;
  std::int64_t r_max = 0;
  std::vector<ShellStat> shells;  // radii 0..r_max

  enum class Verdict { ConfirmedUpToRmax, ViolatedAt };
  Verdict verdict = Verdict::ConfirmedUpToRmax;

  /// Present (>= -1) iff verdict is ConfirmedUpToRmax: the largest scanned
  /// radius whose shell still contains a state with AV > -1, i.e. the
  /// smallest N with AV <= -1 for every scanned x with sum(x) > N. -1 means
  /// no scanned state violates the bound at all.
  std::int64_t exception_bound = -1;

  /// A state with AV > -1 on the outermost shell (ViolatedAt only).
  State violation_state;
  double violation_value = 0.0;
};

/// Exhaustively evaluates AV on every lattice shell sum(x) = R for
/// R = 0..r_max. Never claims anything beyond r_max. Throws BudgetError if
/// a shell holds more than shell_budget states.
DriftReport drift_scan(const ReactionNetwork& net, const LyapunovSpec& spec,
                       std::int64_t r_max, std::int64_t shell_budget = 2'000'000);

/// Number of states on the shell sum(x) = r in d species.
std::int64_t shell_state_count(int d, std::int64_t r);

}  // namespace crn

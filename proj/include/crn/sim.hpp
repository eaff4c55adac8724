#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "crn/network.hpp"

namespace crn {

enum class SimMethod { Direct, NextReaction };

const char* sim_method_id(SimMethod m);

/// Single-trajectory stepper over the mass-action chain. Both methods are
/// statistically exact samplers of the same law; a fixed (net, x0, seed,
/// method) reproduces the trajectory bit for bit.
class Stepper {
 public:
  Stepper(const ReactionNetwork& net, State x0, std::uint64_t seed, SimMethod method);
  Stepper(Stepper&&) noexcept;
  ~Stepper();

  /// Fires the next reaction if its time does not exceed t_max; returns the
  /// reaction index, or -1 when the trajectory is absorbed, truncated, or
  /// the next jump falls beyond t_max (state and clock then stay put).
  int step(double t_max);

  double time() const;
  const State& state() const;
  bool absorbed() const;
  bool truncated() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Jump {
  double time = 0.0;
  int reaction = -1;
  State post_state;
};

struct Trajectory {
  State initial;
  std::vector<Jump> jumps;  // strictly increasing times
  std::uint64_t seed = 0;
  double t_end = 0.0;
  SimMethod method = SimMethod::Direct;
  bool absorbed = false;   // no reaction enabled at the final state
  bool truncated = false;  // counts outgrew the numeric range; partial result
};

/// Exact sample of the chain on [0, t_end].
Trajectory simulate(const ReactionNetwork& net, const State& x0, double t_end,
                    std::uint64_t seed, SimMethod method = SimMethod::Direct);

/// Per-species inclusive upper bounds of a truncation box (lower bound 0).
struct Box {
  std::vector<std::int64_t> upper;

  bool contains(const State& x) const {
    for (std::size_t i = 0; i < upper.size(); ++i)
      if (x[i] < 0 || x[i] > upper[i]) return false;
    return true;
  }
  std::int64_t volume() const {
    std::int64_t v = 1;
    for (auto b : upper) v *= b + 1;
    return v;
  }
};

/// Communicating classes of the transition graph truncated to a box.
/// "Closed" is box-relative: no in-box transition leaves the class. A
/// boundary caveat marks classes with a member that can jump out of the
/// box, where the truncation may hide escapes.
struct TruncatedClassDecomposition {
  Box box;
  std::vector<std::vector<State>> classes;
  std::vector<bool> closed;
  std::vector<bool> boundary_caveat;
};

TruncatedClassDecomposition communicating_classes(const ReactionNetwork& net, const Box& box,
                                                  std::int64_t volume_budget = 1'000'000);

struct EntryTimeEstimate {
  double mean = 0.0;          // over uncensored trials; NaN when none finish
  double ci_halfwidth = 0.0;  // 95% normal CI halfwidth
  std::int64_t censored = 0;  // trials with no entry by t_cap
  std::int64_t trials = 0;
};

/// Monte Carlo estimate of the expected time to enter the union of the
/// box-relative closed classes, starting from x0 (inside the box).
EntryTimeEstimate estimate_entry_time(const ReactionNetwork& net, const State& x0,
                                      const Box& box, std::int64_t n_trials, double t_cap,
                                      std::uint64_t seed,
                                      std::int64_t volume_budget = 1'000'000);

/// Time-weighted occupancy of states over [burn_in, t_end], normalized to
/// total mass 1, from a single trajectory.
std::map<State, double> stationary_histogram(const ReactionNetwork& net, const State& x0,
                                             double t_end, double burn_in, std::uint64_t seed,
                                             SimMethod method = SimMethod::Direct);

}  // namespace crn

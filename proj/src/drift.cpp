#include "crn/drift.hpp"

#include <cmath>
#include <stdexcept>

namespace crn {

LyapunovSpec LyapunovSpec::power(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("power Lyapunov needs 0 < delta < 1");
  return {Kind::Power, delta};
}

LyapunovSpec LyapunovSpec::entropy_plus_power(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("power Lyapunov needs 0 < delta < 1");
  return {Kind::EntropyPlusPower, delta};
}

std::string LyapunovSpec::to_string() const {
  switch (kind) {
    case Kind::Entropy:
      return "entropy";
    case Kind::Linear:
      return "linear";
    case Kind::Power:
      return "power(delta=" + std::to_string(delta) + ")";
    case Kind::EntropyPlusPower:
      return "entropy+power(delta=" + std::to_string(delta) + ")";
  }
  return {};
}

double entropy_term(std::int64_t x) {
  if (x < 0) return 1.0;
  if (x == 0) return 1.0;  // 0 ln 0 = 0
  double xd = static_cast<double>(x);
  return xd * (std::log(xd) - 1.0) + 1.0;
}

namespace {

/// v(x + k) - v(x) for x >= 0, evaluated without the cancellation of two
/// large v values: for x, x+k >= 1 this is x log1p(k/x) + k (ln(x+k) - 1).
double entropy_delta(std::int64_t x, std::int64_t k) {
  std::int64_t b = x + k;
  if (k == 0) return 0.0;
  if (x <= 0 || b <= 0) return entropy_term(b) - entropy_term(x);
  double xd = static_cast<double>(x);
  double kd = static_cast<double>(k);
  return xd * std::log1p(kd / xd) + kd * (std::log(static_cast<double>(b)) - 1.0);
}

double power_total(double total, double delta) {
  if (total <= 0.0) return 0.0;
  return std::pow(total, 2.0 + delta);
}

std::int64_t total_count(const State& x) {
  std::int64_t s = 0;
  for (auto v : x) s += v;
  return s;
}

}  // namespace

double lyapunov_value(const LyapunovSpec& spec, const State& x) {
  double entropy = 0.0;
  if (spec.kind == LyapunovSpec::Kind::Entropy ||
      spec.kind == LyapunovSpec::Kind::EntropyPlusPower)
    for (auto v : x) entropy += entropy_term(v);

  double total = static_cast<double>(total_count(x));
  switch (spec.kind) {
    case LyapunovSpec::Kind::Entropy:
      return entropy;
    case LyapunovSpec::Kind::Linear:
      return total;
    case LyapunovSpec::Kind::Power:
      return power_total(total, spec.delta);
    case LyapunovSpec::Kind::EntropyPlusPower:
      return entropy + power_total(total, spec.delta);
  }
  return 0.0;
}

double generator_apply(const ReactionNetwork& net, const LyapunovSpec& spec, const State& x) {
  const auto& reactions = net.reactions();
  const auto& deltas = net.deltas();
  const std::int64_t total = total_count(x);

  // Neumaier-compensated sum over reactions.
  double sum = 0.0, comp = 0.0;
  auto accumulate = [&](double term) {
    double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  };

  for (std::size_t j = 0; j < reactions.size(); ++j) {
    double lambda = reaction_intensity(reactions[j], x);
    if (lambda == 0.0) continue;

    const auto& delta = deltas[j];
    double dv = 0.0;
    if (spec.kind == LyapunovSpec::Kind::Entropy ||
        spec.kind == LyapunovSpec::Kind::EntropyPlusPower) {
      for (std::size_t i = 0; i < delta.size(); ++i)
        if (delta[i] != 0) dv += entropy_delta(x[i], delta[i]);
    }
    if (spec.kind != LyapunovSpec::Kind::Entropy) {
      std::int64_t dtotal = 0;
      for (auto v : delta) dtotal += v;
      if (spec.kind == LyapunovSpec::Kind::Linear) {
        dv += static_cast<double>(dtotal);
      } else if (dtotal != 0) {
        dv += power_total(static_cast<double>(total + dtotal), spec.delta) -
              power_total(static_cast<double>(total), spec.delta);
      }
    }
    accumulate(lambda * dv);
  }
  return sum + comp;
}

std::int64_t shell_state_count(int d, std::int64_t r) {
  // C(r + d - 1, d - 1)
  std::int64_t n = r + d - 1;
  std::int64_t k = d - 1;
  double count = 1.0;
  for (std::int64_t i = 1; i <= k; ++i)
    count *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return static_cast<std::int64_t>(std::llround(count));
}

DriftReport drift_scan(const ReactionNetwork& net, const LyapunovSpec& spec,
                       std::int64_t r_max, std::int64_t shell_budget) {
  if (r_max < 1) throw std::invalid_argument("drift_scan needs r_max >= 1");
  const int d = net.species_count();

  DriftReport report;
  report.lyapunov = spec;
  report.r_max = r_max;

  for (std::int64_t r = 0; r <= r_max; ++r) {
    if (shell_state_count(d, r) > shell_budget)
      throw BudgetError("shell sum(x) = " + std::to_string(r) + " holds " +
                        std::to_string(shell_state_count(d, r)) +
                        " states, over the budget of " + std::to_string(shell_budget));

    ShellStat stat;
    stat.radius = r;
    bool first = true;

    // Compositions of r into d parts: start at (r, 0, ..., 0); successor
    // moves one unit rightward, resetting the prefix.
    State x(d, 0);
    x[0] = r;
    while (true) {
      double value = generator_apply(net, spec, x);
      if (first || value > stat.max_value) {
        stat.max_value = value;
        stat.argmax = x;
        first = false;
      }
      if (d == 1 || x[d - 1] == r) break;
      int i = 0;
      while (x[i] == 0) ++i;
      std::int64_t t = x[i];
      x[i] = 0;
      x[0] = t - 1;
      x[i + 1] += 1;
    }
    report.shells.push_back(std::move(stat));
  }

  std::int64_t worst_violation = -1;
  for (const auto& s : report.shells)
    if (s.max_value > -1.0) worst_violation = s.radius;

  if (worst_violation == r_max) {
    report.verdict = DriftReport::Verdict::ViolatedAt;
    report.violation_state = report.shells.back().argmax;
    report.violation_value = report.shells.back().max_value;
  } else {
    report.verdict = DriftReport::Verdict::ConfirmedUpToRmax;
    report.exception_bound = worst_violation;
  }
  return report;
}

}  // namespace crn

#include "crn/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

#include "crn/rng.hpp"

namespace crn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kCountCeiling = 1LL << 52;

/// Indexed binary min-heap over (time, reaction) keys with update support.
class TimeHeap {
 public:
  explicit TimeHeap(int n) : pos_(n, -1) {}

  void set(int id, double key) {
    if (pos_[id] < 0) {
      pos_[id] = static_cast<int>(heap_.size());
      heap_.push_back({key, id});
      sift_up(pos_[id]);
    } else {
      int i = pos_[id];
      double old = heap_[i].first;
      heap_[i].first = key;
      if (key < old)
        sift_up(i);
      else
        sift_down(i);
    }
  }

  std::pair<double, int> min() const { return heap_.front(); }
  double key(int id) const { return heap_[pos_[id]].first; }

 private:
  std::vector<std::pair<double, int>> heap_;
  std::vector<int> pos_;

  bool less(std::size_t a, std::size_t b) const {
    return heap_[a].first < heap_[b].first ||
           (heap_[a].first == heap_[b].first && heap_[a].second < heap_[b].second);
  }
  void swap_nodes(std::size_t a, std::size_t b) {
    std::swap(heap_[a], heap_[b]);
    pos_[heap_[a].second] = static_cast<int>(a);
    pos_[heap_[b].second] = static_cast<int>(b);
  }
  void sift_up(int i) {
    while (i > 0 && less(i, (i - 1) / 2)) {
      swap_nodes(i, (i - 1) / 2);
      i = (i - 1) / 2;
    }
  }
  void sift_down(int i) {
    const int n = static_cast<int>(heap_.size());
    while (true) {
      int best = i, l = 2 * i + 1, r = 2 * i + 2;
      if (l < n && less(l, best)) best = l;
      if (r < n && less(r, best)) best = r;
      if (best == i) break;
      swap_nodes(i, best);
      i = best;
    }
  }
};

}  // namespace

const char* sim_method_id(SimMethod m) {
  return m == SimMethod::Direct ? "direct" : "next_reaction";
}

struct Stepper::Impl {
  const ReactionNetwork& net;
  State x;
  double t = 0.0;
  SplitMix64 rng;
  SimMethod method;
  bool absorbed_flag = false;
  bool truncated_flag = false;

  // Next-reaction state: cached intensities, putative firing times, and
  // reactions whose intensity depends on species a given reaction moves.
  std::vector<double> lambda;
  std::unique_ptr<TimeHeap> heap;
  std::vector<std::vector<int>> dependents;

  Impl(const ReactionNetwork& n, State x0, std::uint64_t seed, SimMethod m)
      : net(n), x(std::move(x0)), rng(seed), method(m) {
    if (x.size() != static_cast<std::size_t>(net.species_count()))
      throw std::invalid_argument("state size does not match species count");
    for (auto v : x)
      if (v < 0) throw std::invalid_argument("negative initial count");

    if (method == SimMethod::NextReaction) {
      const int r = static_cast<int>(net.reactions().size());
      dependents.resize(r);
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) {
          bool touches = false;
          for (const auto& term : net.reactions()[k].source.terms())
            touches |= net.deltas()[j][term.first] != 0;
          if (touches) dependents[j].push_back(k);
        }
      }
      lambda.resize(r);
      heap = std::make_unique<TimeHeap>(r);
      for (int k = 0; k < r; ++k) {
        lambda[k] = reaction_intensity(net.reactions()[k], x);
        heap->set(k, lambda[k] > 0.0 ? rng.next_exponential(lambda[k]) : kInf);
      }
    }
  }

  int step_direct(double t_max) {
    const auto& reactions = net.reactions();
    double total = 0.0;
    for (const auto& r : reactions) total += reaction_intensity(r, x);
    if (total == 0.0) {
      absorbed_flag = true;
      return -1;
    }
    if (!std::isfinite(total)) {
      truncated_flag = true;
      return -1;
    }
    double t_next = t + rng.next_exponential(total);
    if (t_next > t_max) return -1;
    double u = rng.next_unit() * total;
    int fired = static_cast<int>(reactions.size()) - 1;
    double acc = 0.0;
    for (std::size_t j = 0; j < reactions.size(); ++j) {
      acc += reaction_intensity(reactions[j], x);
      if (u <= acc) {
        fired = static_cast<int>(j);
        break;
      }
    }
    apply(fired, t_next);
    return fired;
  }

  int step_next_reaction(double t_max) {
    auto [tau, fired] = heap->min();
    if (tau == kInf) {
      absorbed_flag = true;
      return -1;
    }
    if (tau > t_max) return -1;
    apply(fired, tau);
    if (truncated_flag) return -1;

    for (int k : dependents[fired]) {
      if (k == fired) continue;
      double fresh = reaction_intensity(net.reactions()[k], x);
      if (fresh == lambda[k]) continue;
      if (lambda[k] > 0.0 && fresh > 0.0) {
        // Rescale the residual clock; the exponential residual keeps its
        // law under the intensity change.
        heap->set(k, t + (heap->key(k) - t) * (lambda[k] / fresh));
      } else if (fresh > 0.0) {
        heap->set(k, t + rng.next_exponential(fresh));
      } else {
        heap->set(k, kInf);
      }
      lambda[k] = fresh;
    }
    double fresh = reaction_intensity(net.reactions()[fired], x);
    lambda[fired] = fresh;
    heap->set(fired, fresh > 0.0 ? t + rng.next_exponential(fresh) : kInf);
    return fired;
  }

  void apply(int reaction, double t_next) {
    t = t_next;
    const auto& delta = net.deltas()[reaction];
    for (std::size_t i = 0; i < delta.size(); ++i) {
      x[i] += delta[i];
      if (x[i] > kCountCeiling) truncated_flag = true;
    }
  }
};

Stepper::Stepper(const ReactionNetwork& net, State x0, std::uint64_t seed, SimMethod method)
    : impl_(std::make_unique<Impl>(net, std::move(x0), seed, method)) {}
Stepper::Stepper(Stepper&&) noexcept = default;
Stepper::~Stepper() = default;

int Stepper::step(double t_max) {
  if (impl_->absorbed_flag || impl_->truncated_flag) return -1;
  return impl_->method == SimMethod::Direct ? impl_->step_direct(t_max)
                                            : impl_->step_next_reaction(t_max);
}

double Stepper::time() const { return impl_->t; }
const State& Stepper::state() const { return impl_->x; }
bool Stepper::absorbed() const { return impl_->absorbed_flag; }
bool Stepper::truncated() const { return impl_->truncated_flag; }

Trajectory simulate(const ReactionNetwork& net, const State& x0, double t_end,
                    std::uint64_t seed, SimMethod method) {
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  Trajectory traj;
  traj.initial = x0;
  traj.seed = seed;
  traj.t_end = t_end;
  traj.method = method;

  Stepper stepper(net, x0, seed, method);
  while (true) {
    int fired = stepper.step(t_end);
    if (fired < 0) break;
    traj.jumps.push_back({stepper.time(), fired, stepper.state()});
  }
  traj.absorbed = stepper.absorbed();
  traj.truncated = stepper.truncated();
  return traj;
}

namespace {

std::int64_t state_index(const State& x, const Box& box) {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * (box.upper[i] + 1) + x[i];
  return idx;
}

State state_from_index(std::int64_t idx, const Box& box) {
  State x(box.upper.size(), 0);
  for (std::size_t i = box.upper.size(); i-- > 0;) {
    x[i] = idx % (box.upper[i] + 1);
    idx /= box.upper[i] + 1;
  }
  return x;
}

}  // namespace

TruncatedClassDecomposition communicating_classes(const ReactionNetwork& net, const Box& box,
                                                  std::int64_t volume_budget) {
  if (box.upper.size() != static_cast<std::size_t>(net.species_count()))
    throw std::invalid_argument("box needs one bound per species");
  for (auto b : box.upper)
    if (b < 0) throw std::invalid_argument("box bound must be non-negative");
  const std::int64_t volume = box.volume();
  if (volume > volume_budget)
    throw BudgetError("box holds " + std::to_string(volume) + " states, over the budget of " +
                      std::to_string(volume_budget));

  const int n = static_cast<int>(volume);
  std::vector<std::vector<int>> edges(n);
  std::vector<bool> jumps_out(n, false);
  for (int v = 0; v < n; ++v) {
    State x = state_from_index(v, box);
    for (std::size_t j = 0; j < net.reactions().size(); ++j) {
      if (reaction_intensity(net.reactions()[j], x) == 0.0) continue;
      State y = x;
      const auto& delta = net.deltas()[j];
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += delta[i];
      if (box.contains(y))
        edges[v].push_back(static_cast<int>(state_index(y, box)));
      else
        jumps_out[v] = true;
    }
  }

  // Iterative Tarjan over the in-box transition graph.
  std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;
  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < edges[f.v].size()) {
        int w = edges[f.v][f.edge++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
        if (lowlink[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }

  // Order classes by smallest member state index.
  std::vector<int> first_member(next_comp, n);
  for (int v = 0; v < n; ++v) first_member[comp[v]] = std::min(first_member[comp[v]], v);
  std::vector<int> order(next_comp);
  for (int c = 0; c < next_comp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first_member[a] < first_member[b]; });
  std::vector<int> rank(next_comp);
  for (int i = 0; i < next_comp; ++i) rank[order[i]] = i;

  TruncatedClassDecomposition out;
  out.box = box;
  out.classes.resize(next_comp);
  out.closed.assign(next_comp, true);
  out.boundary_caveat.assign(next_comp, false);
  for (int v = 0; v < n; ++v) {
    int c = rank[comp[v]];
    out.classes[c].push_back(state_from_index(v, box));
    if (jumps_out[v]) out.boundary_caveat[c] = true;
    for (int w : edges[v])
      if (comp[w] != comp[v]) out.closed[c] = false;
  }
  return out;
}

EntryTimeEstimate estimate_entry_time(const ReactionNetwork& net, const State& x0,
                                      const Box& box, std::int64_t n_trials, double t_cap,
                                      std::uint64_t seed, std::int64_t volume_budget) {
  if (!box.contains(x0)) throw std::invalid_argument("x0 lies outside the box");
  if (n_trials < 1) throw std::invalid_argument("need at least one trial");

  auto decomposition = communicating_classes(net, box, volume_budget);
  std::set<State> target;
  for (std::size_t c = 0; c < decomposition.classes.size(); ++c)
    if (decomposition.closed[c])
      target.insert(decomposition.classes[c].begin(), decomposition.classes[c].end());

  EntryTimeEstimate est;
  est.trials = n_trials;
  double sum = 0.0, sum_sq = 0.0;
  std::int64_t finished = 0;

  for (std::int64_t trial = 0; trial < n_trials; ++trial) {
    double tau = -1.0;
    if (target.count(x0)) {
      tau = 0.0;
    } else {
      SplitMix64 stream = SplitMix64::stream(seed, static_cast<std::uint64_t>(trial));
      Stepper stepper(net, x0, stream.next_u64(), SimMethod::Direct);
      while (true) {
        int fired = stepper.step(t_cap);
        if (fired < 0) break;  // absorbed outside the target, or out of time
        if (target.count(stepper.state())) {
          tau = stepper.time();
          break;
        }
      }
    }
    if (tau < 0.0) {
      ++est.censored;
    } else {
      sum += tau;
      sum_sq += tau * tau;
      ++finished;
    }
  }

  if (finished == 0) {
    est.mean = std::numeric_limits<double>::quiet_NaN();
    est.ci_halfwidth = std::numeric_limits<double>::quiet_NaN();
  } else {
    est.mean = sum / static_cast<double>(finished);
    double var = finished > 1
                     ? (sum_sq - sum * sum / static_cast<double>(finished)) /
                           static_cast<double>(finished - 1)
                     : 0.0;
    est.ci_halfwidth = 1.959963984540054 * std::sqrt(std::max(var, 0.0) /
                                                     static_cast<double>(finished));
  }
  return est;
}

std::map<State, double> stationary_histogram(const ReactionNetwork& net, const State& x0,
                                             double t_end, double burn_in, std::uint64_t seed,
                                             SimMethod method) {
  if (!(burn_in >= 0.0) || !(burn_in < t_end))
    throw std::invalid_argument("need 0 <= burn_in < t_end");

  std::map<State, double> mass;
  Stepper stepper(net, x0, seed, method);
  double t_prev = 0.0;
  State prev = x0;
  while (true) {
    int fired = stepper.step(t_end);
    double t_next = fired < 0 ? t_end : stepper.time();
    double overlap = std::min(t_next, t_end) - std::max(t_prev, burn_in);
    if (overlap > 0.0) mass[prev] += overlap;
    if (fired < 0) break;
    t_prev = t_next;
    prev = stepper.state();
  }
  const double window = t_end - burn_in;
  for (auto& [state, m] : mass) m /= window;
  return mass;
}

}  // namespace crn

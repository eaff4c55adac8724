#include "crn/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace crn {

namespace {

// Iterative Tarjan SCC over the complex digraph; returns component id per
// complex. Component ids are not ordered; callers only compare equality.
std::vector<int> scc_ids(const ReactionNetwork& net) {
  const int n = static_cast<int>(net.complexes().size());
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
      const auto& out = net.outgoing()[f.v];
      if (f.edge < out.size()) {
        int w = net.product_index(out[f.edge++]);
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
  return comp;
}

}  // namespace

std::vector<LinkageClass> linkage_classes(const ReactionNetwork& net) {
  const int n = static_cast<int>(net.complexes().size());

  // Undirected connected components via BFS.
  std::vector<std::vector<int>> undirected(n);
  for (std::size_t j = 0; j < net.reactions().size(); ++j) {
    int s = net.source_index(static_cast<int>(j));
    int p = net.product_index(static_cast<int>(j));
    undirected[s].push_back(p);
    undirected[p].push_back(s);
  }
  std::vector<int> component(n, -1);
  int n_components = 0;
  for (int v = 0; v < n; ++v) {
    if (component[v] != -1) continue;
    std::deque<int> queue{v};
    component[v] = n_components;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : undirected[u])
        if (component[w] == -1) {
          component[w] = n_components;
          queue.push_back(w);
        }
    }
    ++n_components;
  }

  std::vector<int> scc = scc_ids(net);

  std::vector<LinkageClass> classes(n_components);
  for (int v = 0; v < n; ++v) classes[component[v]].complex_indices.push_back(v);
  for (std::size_t j = 0; j < net.reactions().size(); ++j)
    classes[component[net.source_index(static_cast<int>(j))]].reaction_indices.push_back(
        static_cast<int>(j));
  for (auto& cls : classes) {
    cls.weakly_reversible = true;
    for (int v : cls.complex_indices)
      if (scc[v] != scc[cls.complex_indices.front()]) {
        cls.weakly_reversible = false;
        break;
      }
  }
  return classes;
}

ComplexKind classify_complex(const Complex& y) {
  const std::int64_t order = y.order();
  if (order == 0) return ComplexKind::Zero;
  if (order == 1) return ComplexKind::Unary;
  if (order == 2)
    return y.terms().size() == 1 ? ComplexKind::Double : ComplexKind::Binary;
  throw NotBinaryComplex("complex has order " + std::to_string(order) +
                         " (> 2); not part of a binary network");
}

bool is_binary(const ReactionNetwork& net) {
  for (const auto& y : net.complexes())
    if (y.order() > 2) return false;
  return true;
}

bool is_double_full(const ReactionNetwork& net) {
  for (SpeciesId i = 0; i < net.species_count(); ++i)
    if (net.complex_index(Complex::twice(i)) < 0) return false;
  return true;
}

bool has_all_flows(const ReactionNetwork& net) {
  std::map<std::pair<Complex, Complex>, bool> present;
  for (const auto& r : net.reactions()) present[{r.source, r.product}] = true;
  for (SpeciesId i = 0; i < net.species_count(); ++i) {
    Complex s = Complex::unary(i);
    if (!present.count({Complex::zero(), s}) || !present.count({s, Complex::zero()}))
      return false;
  }
  return true;
}

std::optional<std::vector<int>> directed_path(
    const ReactionNetwork& net, int from_index,
    const std::function<bool(const Complex&)>& target) {
  const auto& complexes = net.complexes();
  if (target(complexes[from_index])) return std::vector<int>{};

  std::vector<int> via_reaction(complexes.size(), -1);
  std::vector<bool> visited(complexes.size(), false);
  visited[from_index] = true;
  std::deque<int> queue{from_index};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int j : net.outgoing()[v]) {
      int w = net.product_index(j);
      if (visited[w]) continue;
      visited[w] = true;
      via_reaction[w] = j;
      if (target(complexes[w])) {
        std::vector<int> path;
        for (int u = w; u != from_index; u = net.source_index(via_reaction[u]))
          path.push_back(via_reaction[u]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

bool unary_or_zero(const Complex& y) { return y.order() <= 1; }

}  // namespace crn

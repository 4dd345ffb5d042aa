#include "fpknot/cayley.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpknot {

std::size_t SimpleGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adj) deg += a.size();
  return deg / 2;
}

SimpleGraph build_cayley(const PermRep& r, const std::vector<std::size_t>& gens) {
  if (!r.regular) throw std::invalid_argument("Cayley graph needs a regular representation");
  if (gens.empty()) throw std::invalid_argument("generator subset must be nonempty");
  for (std::size_t g : gens) {
    if (g >= r.images.size()) throw std::invalid_argument("generator index out of range");
  }
  SimpleGraph graph;
  graph.n = r.degree;
  graph.adj.resize(r.degree);
  for (std::size_t g : gens) {
    const auto& img = r.images[g];
    for (std::uint32_t x = 0; x < r.degree; ++x) {
      std::uint32_t y = img[x];
      if (y == x) continue;
      graph.adj[x].push_back(y);
      graph.adj[y].push_back(x);
    }
  }
  for (auto& a : graph.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return graph;
}

std::vector<std::uint32_t> articulation_points(const SimpleGraph& g) {
  const std::size_t n = g.n;
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  int counter = 0;

  // Iterative DFS; a frame tracks the next neighbour to visit.
  struct Frame {
    std::uint32_t v;
    std::uint32_t parent;
    std::size_t next_edge;
    int children;
  };
  std::vector<Frame> stack;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    stack.push_back({root, root, 0, 0});
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_edge < g.adj[f.v].size()) {
        std::uint32_t w = g.adj[f.v][f.next_edge++];
        if (order[w] == -1) {
          order[w] = low[w] = counter++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          low[up.v] = std::min(low[up.v], low[done.v]);
          if (up.v != root && low[done.v] >= order[up.v]) is_cut[up.v] = true;
        }
        if (done.v == root && done.children > 1) is_cut[root] = true;
      }
    }
  }

  std::vector<std::uint32_t> cuts;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (is_cut[v]) cuts.push_back(v);
  }
  return cuts;
}

}  // namespace fpknot

#ifndef FPKNOT_CAYLEY_HPP
#define FPKNOT_CAYLEY_HPP

#include <cstdint>
#include <vector>

#include "fpknot/perm.hpp"

namespace fpknot {

// Undirected simple graph: no loops, no parallel edges, sorted adjacency.
// Vertices are 0-based.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> adj;

  std::size_t edge_count() const;
};

// Cayley graph of a regular representation on the chosen generator subset:
// vertices are group elements, one undirected edge {x, x.g} per vertex and
// generator. Self-loops from trivial generators are dropped and parallel
// edges collapsed.
SimpleGraph build_cayley(const PermRep& r, const std::vector<std::size_t>& gens);

// Exact cut-vertex set by depth-first low-link, ascending order.
std::vector<std::uint32_t> articulation_points(const SimpleGraph& g);

}  // namespace fpknot

#endif  // FPKNOT_CAYLEY_HPP

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace borda {

using Vertex = std::size_t;

/// Simple undirected graph; edges are stored with u < v, sorted.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  bool operator==(const Graph&) const = default;
};

/// Normalizes and validates: endpoints < n, no self-loops, no duplicates.
/// Throws DomainError.
Graph make_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);
std::size_t degree(const Graph& g, Vertex v);
std::vector<std::vector<char>> adjacency(const Graph& g);

bool dominates(const Graph& g, const std::vector<Vertex>& set);

/// Smallest, then lexicographically least, dominating set of size <= k.
std::optional<std::vector<Vertex>> solve_dominating_set(const Graph& g, std::size_t k);

}  // namespace borda

#include "borda/graph.hpp"

#include <algorithm>
#include <string>

#include "borda/election.hpp"

namespace borda {

Graph make_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("edge " + std::to_string(u) + " " + std::to_string(v) + " has an endpoint >= " +
                        std::to_string(n));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw DomainError("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  return Graph{n, std::move(edges)};
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.n) throw DomainError("vertex " + std::to_string(v) + " out of range");
  std::vector<Vertex> out{v};
  for (const auto& [a, b] : g.edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t degree(const Graph& g, Vertex v) { return closed_neighborhood(g, v).size() - 1; }

std::vector<std::vector<char>> adjacency(const Graph& g) {
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (const auto& [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;
  return adj;
}

bool dominates(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<char> covered(g.n, 0);
  for (Vertex s : set)
    for (Vertex u : closed_neighborhood(g, s)) covered[u] = 1;
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::optional<std::vector<Vertex>> solve_dominating_set(const Graph& g, std::size_t k) {
  const std::size_t cap = std::min(k, g.n);
  for (std::size_t size = 0; size <= cap; ++size) {
    std::vector<Vertex> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (dominates(g, pick)) return pick;
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == g.n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace borda

#pragma once

// Simple undirected graphs with a canonical edge indexing.
//
// Vertices are 0-based internally and 1-based in every text format. Each
// edge is stored as (u, v) with u < v; that is its canonical direction, and
// all sign conventions for partial orientations refer to it. Edge ids are
// dense, 0..m-1, in insertion order.
//
// Edge subsets and sign vectors are 64-bit masks, so a Graph holds at most
// 64 vertices and 64 edges. Exponential algorithms in this library run out
// of budget long before that.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gzono/errors.hpp"

namespace gzono {

using EdgeId = std::size_t;

inline constexpr int kMaxVertices = 64;
inline constexpr std::size_t kMaxEdges = 64;

struct Edge {
  int u;  // smaller endpoint
  int v;  // larger endpoint

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;
  EdgeId edge;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1. Endpoints are normalized to u < v.
  /// Throws ParseError on loops, duplicates, out-of-range endpoints, or size overflow.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  /// Same as the constructor, with 1-based vertex labels.
  static Graph from_labels(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(int v) const { return adj_[v]; }
  std::uint64_t neighbor_mask(int v) const { return nbr_mask_[v]; }

  bool adjacent(int u, int v) const { return (nbr_mask_[u] >> v) & 1U; }
  std::optional<EdgeId> find_edge(int u, int v) const;

  /// Bitmask with one bit per edge id.
  std::uint64_t all_edges_mask() const;

  /// The edge set as 1-based (i, j) pairs sorted lexicographically.
  std::vector<std::pair<int, int>> sorted_labels() const;

  /// Labeled equality: same vertex count and same edge set, regardless of edge order.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<std::uint64_t> nbr_mask_;
};

/// A set of edge ids of a host graph.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  EdgeSubset(const Graph& host, std::uint64_t mask);

  static EdgeSubset all(const Graph& host) { return {host, host.all_edges_mask()}; }
  static EdgeSubset none(const Graph& host) { return {host, 0}; }

  std::uint64_t mask() const { return mask_; }
  std::size_t size() const;
  bool contains(EdgeId e) const { return (mask_ >> e) & 1U; }

 private:
  std::uint64_t mask_ = 0;
};

/// A simple cycle. vertices[k] -> vertices[k+1 mod len] traverses edges[k];
/// signs[k] is +1 when that traversal follows the edge's canonical direction.
struct Cycle {
  std::vector<int> vertices;
  std::vector<EdgeId> edges;
  std::vector<int> signs;

  std::size_t length() const { return edges.size(); }
};

/// n minus the number of components of (V, s): the spanning-forest rank.
int rank(const Graph& g, const EdgeSubset& s);
int rank_of_mask(const Graph& g, std::uint64_t edge_mask);

/// |s| - |V(H)| + c(H) where H is the subgraph spanned by s (isolated vertices excluded).
int genus(const Graph& g, const EdgeSubset& s);

bool connected(const Graph& g);

/// Every simple cycle once, canonicalized so that the smallest vertex comes
/// first and its smaller cycle-neighbour second. Throws CapExceeded beyond max_cycles.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_cycles = Caps{}.max_cycles);

/// Graph text format: "n m" then m lines "i j" with 1 <= i < j <= n.
/// Lines starting with '#' and blank lines are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace gzono

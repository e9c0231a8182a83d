#include "gzono/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gzono {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw ParseError("vertex count " + std::to_string(n) + " outside [0, 64]");
  if (edges.size() > kMaxEdges)
    throw ParseError("edge count " + std::to_string(edges.size()) + " exceeds 64");
  adj_.resize(n);
  nbr_mask_.assign(n, 0);
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError("edge endpoint out of range");
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a + 1));
    if (a > b) std::swap(a, b);
    if (adjacent(a, b))
      throw ParseError("duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
    const EdgeId id = edges_.size();
    edges_.push_back({a, b});
    adj_[a].push_back({b, id});
    adj_[b].push_back({a, id});
    nbr_mask_[a] |= std::uint64_t{1} << b;
    nbr_mask_[b] |= std::uint64_t{1} << a;
  }
}

Graph Graph::from_labels(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> zero_based;
  zero_based.reserve(edges.size());
  for (auto [a, b] : edges) zero_based.emplace_back(a - 1, b - 1);
  return Graph(n, zero_based);
}

std::optional<EdgeId> Graph::find_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v)) return std::nullopt;
  for (const auto& inc : adj_[u])
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

std::uint64_t Graph::all_edges_mask() const {
  const auto m = edges_.size();
  return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

std::vector<std::pair<int, int>> Graph::sorted_labels() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u + 1, e.v + 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.edges_.size() == b.edges_.size() && a.nbr_mask_ == b.nbr_mask_;
}

EdgeSubset::EdgeSubset(const Graph& host, std::uint64_t mask) : mask_(mask) {
  if ((mask & ~host.all_edges_mask()) != 0)
    throw PreconditionError("edge subset refers to edges outside its host graph");
}

std::size_t EdgeSubset::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

int rank_of_mask(const Graph& g, std::uint64_t edge_mask) {
  DisjointSets ds(g.vertex_count());
  int r = 0;
  for (auto bits = edge_mask; bits != 0; bits &= bits - 1) {
    const auto& e = g.edge(static_cast<EdgeId>(std::countr_zero(bits)));
    if (ds.unite(e.u, e.v)) ++r;
  }
  return r;
}

int rank(const Graph& g, const EdgeSubset& s) { return rank_of_mask(g, s.mask()); }

int genus(const Graph& g, const EdgeSubset& s) {
  std::uint64_t touched = 0;
  for (auto bits = s.mask(); bits != 0; bits &= bits - 1) {
    const auto& e = g.edge(static_cast<EdgeId>(std::countr_zero(bits)));
    touched |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
  }
  // |V(H)| - c(H) is the forest rank of H, and isolated vertices add nothing to it.
  const int vertices = std::popcount(touched);
  DisjointSets ds(g.vertex_count());
  int components = vertices;
  for (auto bits = s.mask(); bits != 0; bits &= bits - 1) {
    const auto& e = g.edge(static_cast<EdgeId>(std::countr_zero(bits)));
    if (ds.unite(e.u, e.v)) --components;
  }
  return static_cast<int>(s.size()) - vertices + components;
}

bool connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (auto bits = frontier; bits != 0; bits &= bits - 1)
      next |= g.neighbor_mask(std::countr_zero(bits));
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

namespace {

struct CycleSearch {
  const Graph& g;
  std::size_t max_cycles;
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<EdgeId> path_edges;
  std::uint64_t on_path = 0;
  int start = 0;

  void emit(EdgeId closing) {
    if (out.size() >= max_cycles)
      throw CapExceeded("cycle enumeration exceeded cap of " + std::to_string(max_cycles));
    Cycle c;
    c.vertices = path;
    c.edges = path_edges;
    c.edges.push_back(closing);
    c.signs.reserve(c.edges.size());
    for (std::size_t k = 0; k < c.vertices.size(); ++k) {
      const int from = c.vertices[k];
      c.signs.push_back(g.edge(c.edges[k]).u == from ? +1 : -1);
    }
    out.push_back(std::move(c));
  }

  void extend(int v) {
    for (const auto& inc : g.incident(v)) {
      const int w = inc.neighbor;
      if (w == start) {
        // Reflections are skipped by requiring the second vertex to be the smaller neighbour.
        if (path.size() >= 3 && path[1] < v) emit(inc.edge);
        continue;
      }
      if (w < start || ((on_path >> w) & 1U)) continue;
      path.push_back(w);
      path_edges.push_back(inc.edge);
      on_path |= std::uint64_t{1} << w;
      extend(w);
      on_path &= ~(std::uint64_t{1} << w);
      path_edges.pop_back();
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_cycles) {
  CycleSearch search{g, max_cycles, {}, {}, {}, 0, 0};
  for (int s = 0; s < g.vertex_count(); ++s) {
    search.start = s;
    search.path = {s};
    search.on_path = std::uint64_t{1} << s;
    search.extend(s);
  }
  return std::move(search.out);
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::pair<long, long> parse_pair(const std::string& line, int line_no) {
  std::istringstream ss(line);
  long a = 0;
  long b = 0;
  std::string rest;
  if (!(ss >> a >> b) || (ss >> rest))
    throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
  return {a, b};
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("empty graph file");
  const auto [n, m] = parse_pair(line, line_no);
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range");
  if (m < 0 || m > static_cast<long>(kMaxEdges)) throw ParseError("edge count out of range");
  std::vector<std::pair<int, int>> edges;
  for (long k = 0; k < m; ++k) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    const auto [i, j] = parse_pair(line, line_no);
    if (i < 1 || j > n || i >= j)
      throw ParseError("line " + std::to_string(line_no) + ": edge must satisfy 1 <= i < j <= n");
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (next_content_line(in, line, line_no))
    throw ParseError("line " + std::to_string(line_no) + ": trailing content after edge list");
  return Graph::from_labels(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace gzono

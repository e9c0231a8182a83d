#include "gzono/ngon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace gzono {

Graph fan_triangulation(int n) {
  if (n < 3) throw PreconditionError("fan_triangulation: n must be at least 3");
  if (n > kMaxVertices) throw PreconditionError("fan_triangulation: n too large");
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(k, k + 1);
  edges.emplace_back(1, n);
  for (int k = 3; k < n; ++k) edges.emplace_back(1, k);
  return Graph::from_labels(n, edges);
}

Caterpillar::Caterpillar(int leaves) : leaves_(leaves) {
  if (leaves < 2) throw PreconditionError("caterpillar needs at least 2 leaves");
  if (2 * leaves - 2 > kMaxVertices) throw PreconditionError("caterpillar too large");
  pendant_.resize(leaves);
  if (leaves == 2) {
    tree_ = Graph::from_labels(2, {{1, 2}});
    pendant_ = {0, 0};
    return;
  }
  // 0-based: leaves 0..n-1, interior p_k = n + k - 1 for k = 1..n-2.
  const int n = leaves;
  auto interior = [n](int k) { return n + k - 1; };
  auto host_of = [n](int leaf) { return std::clamp(leaf - 1, 1, n - 2); };

  // Edge order walks the spine so each interior vertex closes early.
  std::vector<std::pair<int, int>> edges;
  auto add_pendant = [&](int leaf) {
    pendant_[leaf - 1] = edges.size();
    edges.emplace_back(leaf - 1, interior(host_of(leaf)));
  };
  add_pendant(1);
  add_pendant(2);
  for (int k = 1; k <= n - 3; ++k) {
    path_.push_back(edges.size());
    edges.emplace_back(interior(k), interior(k + 1));
    add_pendant(k + 2);
  }
  add_pendant(n);
  tree_ = Graph(2 * n - 2, edges);
}

Sign Caterpillar::toward_leaf(int leaf) const {
  const auto& e = tree_.edge(pendant_edge(leaf));
  return e.v == leaf - 1 ? Sign::plus : Sign::minus;
}

namespace {

// out[v] = heads of arcs leaving v.
std::vector<std::uint64_t> arcs_out(const Graph& g, const SignVector& s) {
  std::vector<std::uint64_t> out(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (s[e] == Sign::plus) out[ed.u] |= std::uint64_t{1} << ed.v;
    if (s[e] == Sign::minus) out[ed.v] |= std::uint64_t{1} << ed.u;
  }
  return out;
}

bool interior_balanced(const Graph& g, const SignVector& s, int v) {
  bool in = false;
  bool out = false;
  for (const auto& inc : g.incident(v)) {
    const Sign sg = s[inc.edge];
    if (sg == Sign::zero) continue;
    const bool leaves_v = (g.edge(inc.edge).u == v) == (sg == Sign::plus);
    (leaves_v ? out : in) = true;
  }
  return in == out;
}

}  // namespace

CaterpillarVector::CaterpillarVector(const Caterpillar& tree, SignVector signs)
    : tree_(&tree), signs_(signs) {
  if (signs.size() != tree.tree().edge_count())
    throw PreconditionError("caterpillar vector length mismatch");
  if (!is_caterpillar_vector(tree, signs))
    throw PreconditionError("partial orientation is not a caterpillar vector");
}

std::vector<std::uint64_t> CaterpillarVector::reachability() const {
  const Graph& g = tree_->tree();
  const auto out = arcs_out(g, signs_);
  const int n = tree_->leaves();
  const std::uint64_t leaf_mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> reach(n, 0);
  for (int leaf = 0; leaf < n; ++leaf) {
    std::uint64_t seen = std::uint64_t{1} << leaf;
    std::uint64_t frontier = seen;
    std::uint64_t hit = 0;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto bits = frontier; bits != 0; bits &= bits - 1) next |= out[std::countr_zero(bits)];
      hit |= next;
      frontier = next & ~seen;
      seen |= next;
    }
    reach[leaf] = hit & leaf_mask & ~(std::uint64_t{1} << leaf);
  }
  return reach;
}

int CaterpillarVector::reach_components() const {
  const auto reach = reachability();
  const int n = tree_->leaves();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (int i = 0; i < n; ++i)
    for (auto bits = reach[i]; bits != 0; bits &= bits - 1) {
      const int a = find(i);
      const int b = find(std::countr_zero(bits));
      if (a != b) {
        parent[b] = a;
        --components;
      }
    }
  return components;
}

bool is_caterpillar_vector(const Caterpillar& tree, const SignVector& signs) {
  const Graph& g = tree.tree();
  if (signs.size() != g.edge_count()) return false;
  for (int v = tree.leaves(); v < g.vertex_count(); ++v)
    if (!interior_balanced(g, signs, v)) return false;
  return true;
}

std::vector<CaterpillarVector> enumerate_caterpillar_vectors(const Caterpillar& tree, const Caps& caps) {
  if (tree.leaves() > caps.max_caterpillar_leaves)
    throw CapExceeded("caterpillar enumeration: " + std::to_string(tree.leaves()) + " leaves exceeds cap " +
                      std::to_string(caps.max_caterpillar_leaves));
  const Graph& g = tree.tree();
  const std::size_t m = g.edge_count();

  // An interior vertex can be checked once its last incident edge is assigned.
  std::vector<std::vector<int>> closes(m);
  for (int v = tree.leaves(); v < g.vertex_count(); ++v) {
    EdgeId last = 0;
    for (const auto& inc : g.incident(v)) last = std::max(last, inc.edge);
    closes[last].push_back(v);
  }

  std::vector<CaterpillarVector> out;
  SignVector current(m);
  auto descend = [&](auto&& self, std::size_t e) -> void {
    if (e == m) {
      out.emplace_back(tree, current);
      return;
    }
    for (Sign s : {Sign::zero, Sign::plus, Sign::minus}) {
      current.set(e, s);
      const bool ok = std::all_of(closes[e].begin(), closes[e].end(),
                                  [&](int v) { return interior_balanced(g, current, v); });
      if (ok) self(self, e + 1);
    }
    current.set(e, Sign::zero);
  };
  descend(descend, 0);
  return out;
}

int caterpillar_rank(const CaterpillarVector& x) { return x.tree().leaves() - x.reach_components(); }

BigInt count_full_caterpillar_vectors(int n) {
  if (n < 2) throw PreconditionError("count_full_caterpillar_vectors: n must be at least 2");
  return 2 * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n - 2));
}

namespace {

// Binomial coefficient with C(a, b) = 0 outside 0 <= b <= a, except C(-1, -1) = 1.
BigInt binomial(long a, long b) {
  if (a == -1 && b == -1) return 1;
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

BigInt power(long base, long exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace

FaceVector face_vector_formula(int n) {
  if (n < 2) throw PreconditionError("face_vector_formula: n must be at least 2");
  std::vector<BigInt> f(n, 0);
  for (int i = 0; i < n; ++i) {
    BigInt sum = 0;
    for (int m = 0; m <= std::min(i, n - i); ++m)
      sum += power(2, m) * power(3, i - m) * binomial(i - 1, m - 1) * binomial(n, m + i);
    f[n - 1 - i] = sum;
  }
  return FaceVector(std::move(f));
}

BigInt total_faces_matrix(int n) {
  if (n < 0) throw PreconditionError("total_faces_matrix: n must be nonnegative");
  using Mat = std::array<BigInt, 4>;  // row-major 2x2
  auto mul = [](const Mat& a, const Mat& b) {
    return Mat{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
               a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  };
  Mat result{1, 0, 0, 1};
  Mat base{1, 1, 2, 4};
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  // (1 1) * M^n * (1 2)^T
  return (result[0] + result[2]) * 1 + (result[1] + result[3]) * 2;
}

BigInt total_faces_recurrence(int n) {
  if (n < 0) throw PreconditionError("total_faces_recurrence: n must be nonnegative");
  BigInt prev = 3;   // |V_2|
  BigInt cur = 13;   // |V_3|
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    BigInt next = 5 * cur - 2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt total_faces_closed_sum(int n) {
  if (n < 0) throw PreconditionError("total_faces_closed_sum: n must be nonnegative");
  auto term_sum = [](long top) {
    // sum over top/2 <= m <= top of C(m, top-m) 5^(2m-top) (-2)^(top-m)
    BigInt sum = 0;
    for (long m = (top + 1) / 2; m <= top; ++m) {
      BigInt t = binomial(m, top - m) * power(5, 2 * m - top) * power(2, top - m);
      sum += (top - m) % 2 == 0 ? t : BigInt(-t);
    }
    return sum;
  };
  BigInt total = 3 * term_sum(n);
  if (n >= 1) total -= 2 * term_sum(n - 1);
  return total;
}

CountTriple count_triples(int n) {
  if (n < 2) throw PreconditionError("count_triples: n must be at least 2");
  CountTriple t{1, 1, 1};
  for (int k = 3; k <= n; ++k) {
    CountTriple next;
    next.unoriented = t.total();
    next.toward = t.unoriented + 3 * t.toward + t.away;
    next.away = t.unoriented + t.toward + 3 * t.away;
    t = std::move(next);
  }
  return t;
}

CountTriple classify_caterpillar_vectors(const Caterpillar& tree, const Caps& caps) {
  CountTriple t{0, 0, 0};
  const EdgeId last = tree.pendant_edge(tree.leaves());
  const Sign toward = tree.toward_leaf(tree.leaves());
  for (const auto& x : enumerate_caterpillar_vectors(tree, caps)) {
    const Sign s = x.signs()[last];
    if (s == Sign::zero)
      ++t.unoriented;
    else if (s == toward)
      ++t.toward;
    else
      ++t.away;
  }
  return t;
}

std::vector<Graph> enumerate_polygon_triangulations(int n, const Caps& caps) {
  if (n < 3) throw PreconditionError("enumerate_polygon_triangulations: n must be at least 3");
  if (n > caps.max_polygon_vertices)
    throw CapExceeded("polygon triangulations: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.max_polygon_vertices));

  // Triangulations of the sub-polygon a..b (0-based, a < b) as chord lists.
  using Chords = std::vector<std::pair<int, int>>;
  auto triangulate = [](auto&& self, int a, int b) -> std::vector<Chords> {
    if (b - a < 2) return {Chords{}};
    std::vector<Chords> out;
    for (int apex = a + 1; apex < b; ++apex) {
      const auto left = self(self, a, apex);
      const auto right = self(self, apex, b);
      for (const auto& l : left)
        for (const auto& r : right) {
          Chords c = l;
          c.insert(c.end(), r.begin(), r.end());
          if (apex - a > 1) c.emplace_back(a, apex);
          if (b - apex > 1) c.emplace_back(apex, b);
          out.push_back(std::move(c));
        }
    }
    return out;
  };

  std::vector<Graph> out;
  for (auto chords : triangulate(triangulate, 0, n - 1)) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
    edges.emplace_back(0, n - 1);
    std::sort(chords.begin(), chords.end());
    edges.insert(edges.end(), chords.begin(), chords.end());
    out.emplace_back(n, edges);
  }
  return out;
}

SignVector fan_to_caterpillar(const Caterpillar& tree, const SignVector& fan_signs) {
  const int n = tree.leaves();
  if (n < 3) throw PreconditionError("fan_to_caterpillar: n must be at least 3");
  if (fan_signs.size() != static_cast<std::size_t>(2 * n - 3))
    throw PreconditionError("fan_to_caterpillar: sign vector length mismatch");
  SignVector out(tree.tree().edge_count());
  // fan edge ids: {k, k+1} is k-1 for k < n, {1, n} is n-1, chord {1, k} is n + k - 3.
  // Boundary j -> j+1 runs counterclockwise with the triangle on its left, so
  // its dual points into the leaf; 1 -> n runs clockwise, so its dual leaves
  // the leaf; chord 1 -> k has triangle (1, k, k+1) on its left.
  auto put = [&](EdgeId target, Sign s, Sign positive) {
    out.set(target, positive == Sign::plus ? s : -s);
  };
  for (int j = 1; j < n; ++j) put(tree.pendant_edge(j), fan_signs[j - 1], tree.toward_leaf(j));
  put(tree.pendant_edge(n), fan_signs[n - 1], -tree.toward_leaf(n));
  for (int k = 3; k < n; ++k) {
    // dual of chord {1, k} joins p_{k-2} and p_{k-1}; 1 -> k maps to p_{k-1} -> p_{k-2}.
    const EdgeId target = tree.path_edge(k - 2);
    put(target, fan_signs[n + k - 3], Sign::minus);
  }
  return out;
}

}  // namespace gzono

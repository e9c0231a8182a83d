#include "gzono/flip.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <unordered_map>

namespace gzono {

std::string FlipQuad::to_string() const {
  return "(" + std::to_string(v[0] + 1) + "," + std::to_string(v[1] + 1) + "," +
         std::to_string(v[2] + 1) + "," + std::to_string(v[3] + 1) + ")";
}

namespace {

bool quad_shape_ok(const Graph& g, const std::array<int, 4>& v) {
  const int n = g.vertex_count();
  for (int a = 0; a < 4; ++a) {
    if (v[a] < 0 || v[a] >= n) return false;
    for (int b = a + 1; b < 4; ++b)
      if (v[a] == v[b]) return false;
  }
  // Induced subgraph: the 4-cycle, the diagonal v2v4, and nothing else.
  return g.adjacent(v[0], v[1]) && g.adjacent(v[1], v[2]) && g.adjacent(v[2], v[3]) &&
         g.adjacent(v[3], v[0]) && g.adjacent(v[1], v[3]) && !g.adjacent(v[0], v[2]);
}

std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

// Bitmask over {1..4} of the sides a quad vertex belongs to.
unsigned quad_vertex_sides(int k) {
  // v_k (0-based k) lies on side k+1 ({v_k, v_{k+1}}) and side k ({v_{k-1}, v_k}).
  const int prev = (k + 3) % 4;
  return (1U << k) | (1U << prev);
}

}  // namespace

std::optional<FlipQuad> make_flip_quad(const Graph& g, std::array<int, 4> v) {
  if (!quad_shape_ok(g, v)) return std::nullopt;
  const int n = g.vertex_count();
  std::uint64_t quad_mask = 0;
  for (int x : v) quad_mask |= bit(x);

  FlipQuad q;
  q.v = v;
  q.side.assign(n, 0);
  std::uint64_t unvisited = ~quad_mask & (n == 64 ? ~std::uint64_t{0} : bit(n) - 1);
  while (unvisited != 0) {
    const int root = std::countr_zero(unvisited);
    std::uint64_t comp = bit(root);
    std::uint64_t frontier = comp;
    std::uint64_t touches = 0;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto bits = frontier; bits != 0; bits &= bits - 1) {
        const auto nb = g.neighbor_mask(std::countr_zero(bits));
        touches |= nb & quad_mask;
        next |= nb & ~quad_mask;
      }
      frontier = next & ~comp;
      comp |= next;
    }
    unvisited &= ~comp;

    int chosen = 0;
    for (int i = 0; i < 4 && chosen == 0; ++i) {
      const std::uint64_t allowed = bit(v[i]) | bit(v[(i + 1) % 4]);
      if ((touches & ~allowed) == 0) chosen = i + 1;
    }
    if (chosen == 0) return std::nullopt;
    for (auto bits = comp; bits != 0; bits &= bits - 1) q.side[std::countr_zero(bits)] = chosen;
  }
  return q;
}

bool is_valid_flip_quad(const Graph& g, const FlipQuad& q) {
  if (!quad_shape_ok(g, q.v)) return false;
  const int n = g.vertex_count();
  if (static_cast<int>(q.side.size()) != n) return false;
  std::vector<unsigned> sides(n, 0);
  for (int x = 0; x < n; ++x) {
    const auto pos = std::find(q.v.begin(), q.v.end(), x) - q.v.begin();
    if (pos < 4) {
      if (q.side[x] != 0) return false;
      sides[x] = quad_vertex_sides(static_cast<int>(pos));
    } else {
      if (q.side[x] < 1 || q.side[x] > 4) return false;
      sides[x] = 1U << (q.side[x] - 1);
    }
  }
  const auto diagonal = *g.find_edge(q.v[1], q.v[3]);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == diagonal) continue;
    const auto& ed = g.edge(e);
    if ((sides[ed.u] & sides[ed.v]) == 0) return false;
  }
  return true;
}

std::vector<FlipQuad> find_flip_quads(const Graph& g) {
  std::vector<FlipQuad> out;
  for (const auto& diag : g.edges()) {
    const std::uint64_t common = g.neighbor_mask(diag.u) & g.neighbor_mask(diag.v);
    for (auto a_bits = common; a_bits != 0; a_bits &= a_bits - 1) {
      const int a = std::countr_zero(a_bits);
      for (auto b_bits = a_bits & (a_bits - 1); b_bits != 0; b_bits &= b_bits - 1) {
        const int b = std::countr_zero(b_bits);
        if (g.adjacent(a, b)) continue;
        if (auto q = make_flip_quad(g, {a, diag.u, b, diag.v})) out.push_back(std::move(*q));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FlipQuad& x, const FlipQuad& y) { return x.v < y.v; });
  return out;
}

Graph apply_flip(const Graph& g, const FlipQuad& q) {
  if (!is_valid_flip_quad(g, q)) throw PreconditionError("apply_flip: invalid flip quad " + q.to_string());
  const auto diagonal = *g.find_edge(q.v[1], q.v[3]);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == diagonal)
      edges.emplace_back(q.v[0], q.v[2]);
    else
      edges.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  return Graph(g.vertex_count(), edges);
}

namespace {

FlipQuad relabel(const FlipQuad& q, std::array<int, 4> order, std::array<int, 4> side_map) {
  FlipQuad out;
  for (int k = 0; k < 4; ++k) out.v[k] = q.v[order[k]];
  out.side = q.side;
  for (int& s : out.side)
    if (s != 0) s = side_map[s - 1];
  return out;
}

}  // namespace

FlipQuad mirrored_quad(const FlipQuad& q) { return relabel(q, {1, 2, 3, 0}, {4, 1, 2, 3}); }

FlipQuad inverse_quad(const FlipQuad& q) { return relabel(q, {1, 0, 3, 2}, {1, 4, 3, 2}); }

std::optional<FlipPath> flip_equivalence_search(const Graph& g1, const Graph& g2, int max_depth) {
  if (g1.vertex_count() != g2.vertex_count())
    throw PreconditionError("flip_equivalence_search: graphs have different vertex counts");
  if (g1 == g2) return FlipPath{g1, {}, g2};
  if (g1.edge_count() != g2.edge_count() || max_depth <= 0) return std::nullopt;

  struct Node {
    Graph graph;
    std::size_t parent;
    FlipQuad via;
  };
  auto key_of = [](const Graph& g) {
    std::string key;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto m = g.neighbor_mask(v);
      key.append(reinterpret_cast<const char*>(&m), sizeof m);
    }
    return key;
  };

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  nodes.push_back({g1, 0, {}});
  seen.emplace(key_of(g1), 0);
  std::size_t level_begin = 0;
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::size_t level_end = nodes.size();
    if (level_begin == level_end) break;  // closure exhausted
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      for (auto& q : find_flip_quads(nodes[idx].graph)) {
        Graph next = apply_flip(nodes[idx].graph, q);
        auto [it, inserted] = seen.emplace(key_of(next), nodes.size());
        if (!inserted) continue;
        nodes.push_back({std::move(next), idx, std::move(q)});
        if (nodes.back().graph == g2) {
          FlipPath path{g1, {}, nodes.back().graph};
          for (std::size_t at = nodes.size() - 1; at != 0; at = nodes[at].parent)
            path.steps.push_back(nodes[at].via);
          std::reverse(path.steps.begin(), path.steps.end());
          return path;
        }
      }
    }
    level_begin = level_end;
  }
  return std::nullopt;
}

namespace {

// Orientation of the edge {a, b} as seen walking a -> b: +1 along, -1 against, 0 unoriented.
int walk_sign(Sign s, const Edge& e, int a) {
  const int along = e.u == a ? 1 : -1;
  return static_cast<int>(s) * along;
}

bool triangle_orthogonal(int s_ab, int s_bc, int s_ca) {
  const bool agree = s_ab > 0 || s_bc > 0 || s_ca > 0;
  const bool disagree = s_ab < 0 || s_bc < 0 || s_ca < 0;
  return agree == disagree;
}

class QuadView {
 public:
  QuadView(const Graph& g, const FlipQuad& q) : g_(g), q_(q) {
    if (!is_valid_flip_quad(g, q)) throw PreconditionError("flip_bijection: invalid flip quad " + q.to_string());
    for (int k = 0; k < 4; ++k) cycle_[k] = *g.find_edge(q.v[k], q.v[(k + 1) % 4]);
    diagonal_ = *g.find_edge(q.v[1], q.v[3]);
  }

  EdgeId cycle_edge(int k) const { return cycle_[k]; }  // {v_k, v_{k+1}}, 0-based
  EdgeId diagonal() const { return diagonal_; }

  // Walk sign of x along v_a -> v_b before the flip (a, b are 0-based quad indices).
  int before(const SignVector& x, int a, int b) const {
    const auto e = id_before(a, b);
    return walk_sign(x[e], g_.edge(e), q_.v[a]);
  }

  // Walk sign of y along v_a -> v_b after the flip.
  int after(const SignVector& y, int a, int b) const {
    const auto [e, edge] = edge_after(a, b);
    return walk_sign(y[e], edge, q_.v[a]);
  }

  void set_after(SignVector& y, int a, int b, int walk) const {
    const auto [e, edge] = edge_after(a, b);
    const int along = edge.u == q_.v[a] ? 1 : -1;
    y.set(e, static_cast<Sign>(walk * along));
  }

 private:
  EdgeId id_before(int a, int b) const { return *g_.find_edge(q_.v[a], q_.v[b]); }

  std::pair<EdgeId, Edge> edge_after(int a, int b) const {
    if ((a == 0 && b == 2) || (a == 2 && b == 0)) {
      const int lo = std::min(q_.v[0], q_.v[2]);
      const int hi = std::max(q_.v[0], q_.v[2]);
      return {diagonal_, Edge{lo, hi}};
    }
    const auto e = id_before(a, b);
    return {e, g_.edge(e)};
  }

  const Graph& g_;
  const FlipQuad& q_;
  std::array<EdgeId, 4> cycle_{};
  EdgeId diagonal_{};
};

}  // namespace

SignVector flip_bijection(const Graph& g, const FlipQuad& q, const SignVector& x) {
  if (x.size() != g.edge_count()) throw PreconditionError("flip_bijection: sign vector length mismatch");
  const QuadView quad(g, q);

  // X restricted to H must be a covector of H: both triangles around v2v4.
  if (!triangle_orthogonal(quad.before(x, 0, 1), quad.before(x, 1, 3), quad.before(x, 3, 0)) ||
      !triangle_orthogonal(quad.before(x, 1, 2), quad.before(x, 2, 3), quad.before(x, 3, 1)))
    throw PreconditionError("flip_bijection: not a covector on the flip quad");

  int oriented = 0;
  for (int k = 0; k < 4; ++k) oriented += x[quad.cycle_edge(k)] != Sign::zero;

  SignVector y = x;
  if (oriented == 0) {
    y.set(quad.diagonal(), Sign::zero);
    return y;
  }

  if (oriented < 4) {
    // Two or three cycle edges oriented: keep everything, force the sign of v1v3
    // from the two triangles of H'.
    int solutions = 0;
    SignVector forced = y;
    for (Sign s : {Sign::zero, Sign::plus, Sign::minus}) {
      y.set(quad.diagonal(), s);
      if (triangle_orthogonal(quad.after(y, 0, 1), quad.after(y, 1, 2), quad.after(y, 2, 0)) &&
          triangle_orthogonal(quad.after(y, 0, 2), quad.after(y, 2, 3), quad.after(y, 3, 0))) {
        ++solutions;
        forced = y;
      }
    }
    if (solutions != 1) throw PreconditionError("flip_bijection: sign of v1v3 is not forced");
    return forced;
  }

  // All four cycle edges oriented: Y on H' is X on H pulled back along v_i -> v_{i+1},
  // i.e. Y orients v_a -> v_b exactly when X orients v_{a+1} -> v_{b+1}.
  for (int k = 0; k < 4; ++k) quad.set_after(y, k, (k + 1) % 4, quad.before(x, (k + 1) % 4, (k + 2) % 4));
  quad.set_after(y, 0, 2, quad.before(x, 1, 3));

  std::array<bool, 4> reversed{};
  for (int k = 0; k < 4; ++k)
    reversed[k] = quad.after(y, k, (k + 1) % 4) != quad.before(x, k, (k + 1) % 4);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const int s = q.side[ed.u] != 0 ? q.side[ed.u] : q.side[ed.v];
    if (s != 0 && reversed[s - 1]) y.set(e, -x[e]);
  }
  return y;
}

PartialOrientation flip_bijection(const PartialOrientation& x, const FlipQuad& q, const Graph& flipped) {
  const Graph expected = apply_flip(x.host(), q);
  bool same_ids = flipped.edge_count() == expected.edge_count();
  for (EdgeId e = 0; same_ids && e < expected.edge_count(); ++e)
    same_ids = flipped.edge(e) == expected.edge(e);
  if (!same_ids) throw PreconditionError("flip_bijection: target graph is not the flipped host");
  return {flipped, flip_bijection(x.host(), q, x.signs())};
}

FlipTheoremReport verify_flip_theorem(const Graph& g, const FlipQuad& q, const EnumOptions& opts) {
  const Graph flipped = apply_flip(g, q);
  const auto before = covector_signs(g, opts);
  const auto after = covector_signs(flipped, opts);

  FlipTheoremReport r;
  r.before = face_vector_of(g, before);
  r.after = face_vector_of(flipped, after);
  r.covectors_before = before.size();
  r.covectors_after = after.size();
  r.face_vectors_equal = r.before == r.after;

  const int rank_g = rank_of_mask(g, g.all_edges_mask());
  const int rank_flipped = rank_of_mask(flipped, flipped.all_edges_mask());
  const FlipQuad back = inverse_quad(q);

  std::vector<SignVector> image;
  image.reserve(before.size());
  r.rank_preserving = rank_g == rank_flipped;
  r.inverse_is_identity = true;
  for (const auto& x : before) {
    const auto y = flip_bijection(g, q, x);
    r.rank_preserving = r.rank_preserving && rank_of_mask(g, x.zero_mask()) == rank_of_mask(flipped, y.zero_mask());
    r.inverse_is_identity = r.inverse_is_identity && flip_bijection(flipped, back, y) == x;
    image.push_back(y);
  }
  std::sort(image.begin(), image.end());
  r.injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  r.image_is_covector_set = image == after;
  return r;
}

std::vector<Graph> tree_shape_corpus(int k, std::uint64_t seed, int count) {
  if (k < 1 || k > 6) throw PreconditionError("tree_shape_corpus: k must be in 1..6");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::uint64_t bound) { return static_cast<int>(rng() % bound); };

  std::vector<Graph> out;
  for (int c = 0; c < count; ++c) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < k; ++b) {
      const int base = 4 * b;
      for (int i = 0; i < 4; ++i) edges.emplace_back(base + i, base + (i + 1) % 4);
      if (pick(2) == 0)
        edges.emplace_back(base + 0, base + 2);
      else
        edges.emplace_back(base + 1, base + 3);
      if (b == 0) continue;

      const int parent = 4 * pick(b);
      if (pick(2) == 0) {
        edges.emplace_back(parent + pick(4), base + pick(4));
      } else {
        // Two edges joining a side of the child's 4-cycle to a side of the parent's.
        const int ps = pick(4);
        const int cs = pick(4);
        const int p0 = parent + ps;
        const int p1 = parent + (ps + 1) % 4;
        int c0 = base + cs;
        int c1 = base + (cs + 1) % 4;
        if (pick(2) != 0) std::swap(c0, c1);
        edges.emplace_back(p0, c0);
        edges.emplace_back(p1, c1);
      }
    }
    out.emplace_back(4 * k, edges);
  }
  return out;
}

}  // namespace gzono

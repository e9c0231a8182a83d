#include <doctest.h>

#include <set>

#include "gzono/ngon.hpp"
#include "oracles.hpp"

using namespace gzono;

namespace {

FaceVector fv(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return FaceVector(v);
}

// Arcs of a tree orientation as (tail, head) pairs.
std::vector<std::pair<int, int>> arcs(const Graph& g, const SignVector& s) {
  std::vector<std::pair<int, int>> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (s[e] == Sign::plus) out.emplace_back(ed.u, ed.v);
    if (s[e] == Sign::minus) out.emplace_back(ed.v, ed.u);
  }
  return out;
}

// Vertices reachable from `from` along arcs (forward) or against them (backward).
std::vector<bool> reach(int n, const std::vector<std::pair<int, int>>& a, int from, bool forward) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [t, h] : a) {
      const int src = forward ? t : h, dst = forward ? h : t;
      if (src == v && !seen[dst]) {
        seen[dst] = true;
        stack.push_back(dst);
      }
    }
  }
  return seen;
}

// Every arc lies on a directed path between two leaves (leaves are vertices 0..leaves-1).
bool vector_by_paths(const Graph& g, int leaves, const SignVector& s) {
  const auto a = arcs(g, s);
  for (auto [t, h] : a) {
    const auto back = reach(g.vertex_count(), a, t, false);
    const auto fwd = reach(g.vertex_count(), a, h, true);
    bool from_leaf = false, to_leaf = false;
    for (int l = 0; l < leaves; ++l) {
      from_leaf = from_leaf || back[l];
      to_leaf = to_leaf || fwd[l];
    }
    if (!from_leaf || !to_leaf) return false;
  }
  return true;
}

// n minus the weakly connected components of the leaf reachability digraph.
int rank_by_paths(const Graph& g, int leaves, const SignVector& s) {
  const auto a = arcs(g, s);
  std::vector<int> comp(leaves);
  std::iota(comp.begin(), comp.end(), 0);
  for (int i = 0; i < leaves; ++i) {
    const auto fwd = reach(g.vertex_count(), a, i, true);
    for (int j = 0; j < leaves; ++j)
      if (j != i && fwd[j]) {
        const int from = comp[j], to = comp[i];
        for (int& c : comp)
          if (c == from) c = to;
      }
  }
  return leaves - static_cast<int>(std::set<int>(comp.begin(), comp.end()).size());
}

std::vector<SignVector> all_sign_vectors(std::size_t m) {
  std::vector<SignVector> out;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    SignVector x(m);
    auto c = code;
    for (std::size_t e = 0; e < m; ++e, c /= 3) x.set(e, c % 3 == 0 ? Sign::zero : c % 3 == 1 ? Sign::plus : Sign::minus);
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("fan triangulation shape") {
  const Graph t5 = fan_triangulation(5);
  CHECK(t5.vertex_count() == 5);
  CHECK(t5.edge_count() == 7);
  CHECK(t5.edge(4) == Edge{0, 4});
  CHECK(t5.edge(5) == Edge{0, 2});
  CHECK(t5.edge(6) == Edge{0, 3});
  CHECK_THROWS_AS(fan_triangulation(2), PreconditionError);
}

TEST_CASE("caterpillar shape") {
  const Caterpillar c5(5);
  const Graph& t = c5.tree();
  CHECK(t.vertex_count() == 8);
  CHECK(t.edge_count() == 7);
  // Leaves 1, 2 on p1 (vertex 6), leaf 3 on p2, leaves 4, 5 on p3.
  CHECK(t.edge(c5.pendant_edge(1)) == Edge{0, 5});
  CHECK(t.edge(c5.pendant_edge(2)) == Edge{1, 5});
  CHECK(t.edge(c5.pendant_edge(3)) == Edge{2, 6});
  CHECK(t.edge(c5.pendant_edge(4)) == Edge{3, 7});
  CHECK(t.edge(c5.pendant_edge(5)) == Edge{4, 7});
  CHECK(t.edge(c5.path_edge(1)) == Edge{5, 6});
  CHECK(t.edge(c5.path_edge(2)) == Edge{6, 7});
  for (int v = 5; v < 8; ++v) CHECK(t.incident(v).size() == 3);
  CHECK(c5.toward_leaf(1) == Sign::minus);
  CHECK(Caterpillar(2).tree().edge_count() == 1);
}

TEST_CASE("face_vector_formula matches the published table") {
  CHECK(face_vector_formula(2) == fv({2, 1}));
  CHECK(face_vector_formula(3) == fv({6, 6, 1}));
  CHECK(face_vector_formula(4) == fv({18, 28, 12, 1}));
  CHECK(face_vector_formula(5) == fv({54, 114, 80, 20, 1}));
  CHECK(face_vector_formula(6) == fv({162, 432, 422, 180, 30, 1}));
  CHECK(face_vector_formula(7) == fv({486, 1566, 1962, 1190, 350, 42, 1}));
  CHECK(face_vector_formula(8) == fv({1458, 5508, 8424, 6640, 2828, 616, 56, 1}));
  const long totals[] = {3, 13, 59, 269, 1227, 5597, 25531};
  for (int n = 2; n <= 8; ++n) CHECK(face_vector_formula(n).total() == totals[n - 2]);
}

TEST_CASE("face_vector_formula against brute force") {
  // Definition-level oracle for the small fans.
  for (int n = 3; n <= 6; ++n) {
    const Graph g = fan_triangulation(n);
    CHECK(face_vector_formula(n) == face_vector_of(g, oracle::covectors_by_definition(g)));
  }
  for (int n = 3; n <= 9; ++n) CHECK(face_vector_formula(n) == face_vector(fan_triangulation(n)));
}

TEST_CASE("totals agree with each other and with an in-test recurrence") {
  BigInt a = 3, b = 13;  // 2-gon, 3-gon
  for (int n = 0; n <= 60; ++n) {
    const BigInt expected = n == 0 ? a : b;
    CHECK(total_faces_matrix(n) == expected);
    CHECK(total_faces_recurrence(n) == expected);
    CHECK(total_faces_closed_sum(n) == expected);
    if (n >= 1) {
      const BigInt next = 5 * b - 2 * a;
      a = b;
      b = next;
    }
  }
  CHECK(total_faces_matrix(60) > BigInt(std::numeric_limits<std::uint64_t>::max()));
  for (int n = 2; n <= 20; ++n) CHECK(face_vector_formula(n).total() == total_faces_matrix(n - 2));
}

TEST_CASE("count_triples") {
  CHECK(count_triples(2) == CountTriple{1, 1, 1});
  CHECK(count_triples(3) == CountTriple{3, 5, 5});
  for (int n = 2; n <= 9; ++n) {
    const CountTriple t = count_triples(n);
    CHECK(t == classify_caterpillar_vectors(Caterpillar(n)));
    CHECK(t.total() == total_faces_matrix(n - 2));
    CHECK(t.toward == t.away);
  }
}

TEST_CASE("caterpillar vectors match the path definition") {
  for (int n = 2; n <= 6; ++n) {
    const Caterpillar c(n);
    std::vector<SignVector> brute;
    for (const auto& s : all_sign_vectors(c.tree().edge_count()))
      if (vector_by_paths(c.tree(), n, s)) brute.push_back(s);
    std::sort(brute.begin(), brute.end());
    std::vector<SignVector> listed;
    for (const auto& x : enumerate_caterpillar_vectors(c)) {
      listed.push_back(x.signs());
      CHECK(caterpillar_rank(x) == rank_by_paths(c.tree(), n, x.signs()));
    }
    CHECK(listed == brute);
    CHECK(std::is_sorted(listed.begin(), listed.end()));
  }
}

TEST_CASE("caterpillar_rank examples") {
  const Caterpillar c(4);
  CHECK(caterpillar_rank(CaterpillarVector(c, SignVector(c.tree().edge_count()))) == 0);
  // Leaf 1 -> leaf 2 through p1, everything else unoriented: one pair joined.
  SignVector s(c.tree().edge_count());
  s.set(c.pendant_edge(1), -c.toward_leaf(1));
  s.set(c.pendant_edge(2), c.toward_leaf(2));
  const CaterpillarVector x(c, s);
  CHECK(caterpillar_rank(x) == 1);
  CHECK(x.reachability()[0] == 0b10);
  // Orient the path too: 1 -> 2 and 1 -> 4 via p1 -> p2 -> 4.
  s.set(c.path_edge(1), Sign::plus);
  s.set(c.pendant_edge(4), c.toward_leaf(4));
  CHECK(caterpillar_rank(CaterpillarVector(c, s)) == 2);
  s.set(c.pendant_edge(1), Sign::zero);
  CHECK_FALSE(is_caterpillar_vector(c, s));
  CHECK_THROWS_AS(CaterpillarVector(c, s), PreconditionError);
}

TEST_CASE("full caterpillar vectors") {
  for (int n = 2; n <= 10; ++n) {
    const Caterpillar c(n);
    BigInt full = 0;
    for (const auto& x : enumerate_caterpillar_vectors(c)) {
      if (!x.full()) continue;
      ++full;
      CHECK(caterpillar_rank(x) == n - 1);
    }
    CHECK(full == count_full_caterpillar_vectors(n));
    CHECK(full == face_vector_formula(n)[0]);
  }
  Caps tight;
  tight.max_caterpillar_leaves = 5;
  CHECK_THROWS_AS(enumerate_caterpillar_vectors(Caterpillar(6), tight), CapExceeded);
}

TEST_CASE("polygon triangulations") {
  for (int n = 3; n <= 9; ++n) {
    const auto all = enumerate_polygon_triangulations(n);
    CHECK(all.size() == oracle::catalan(n - 2));
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& g : all) {
      CHECK(g.edge_count() == static_cast<std::size_t>(2 * n - 3));
      std::vector<std::uint64_t> key;
      for (int v = 0; v < n; ++v) key.push_back(g.neighbor_mask(v));
      distinct.insert(key);
      // No two chords cross.
      for (EdgeId e = n; e < g.edge_count(); ++e)
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
          const auto& a = g.edge(e);
          const auto& b = g.edge(f);
          CHECK_FALSE((a.u < b.u && b.u < a.v && a.v < b.v));
          CHECK_FALSE((b.u < a.u && a.u < b.v && b.v < a.v));
        }
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_polygon_triangulations(10), CapExceeded);
}

TEST_CASE("property: every triangulation has the formula face vector") {
  for (int n = 4; n <= 7; ++n) {
    const FaceVector expected = face_vector_formula(n);
    for (const auto& g : enumerate_polygon_triangulations(n)) CHECK(face_vector(g) == expected);
  }
}

TEST_CASE("property: duality maps fan covectors onto caterpillar vectors, keeping rank") {
  for (int n = 3; n <= 7; ++n) {
    const Graph fan = fan_triangulation(n);
    const Caterpillar c(n);
    const int r = rank_of_mask(fan, fan.all_edges_mask());
    std::vector<SignVector> image;
    for (const auto& x : covector_signs(fan)) {
      const SignVector y = fan_to_caterpillar(c, x);
      REQUIRE(vector_by_paths(c.tree(), n, y));
      CHECK(rank_by_paths(c.tree(), n, y) == r - rank_of_mask(fan, x.zero_mask()));
      image.push_back(y);
    }
    std::sort(image.begin(), image.end());
    std::vector<SignVector> vectors;
    for (const auto& v : enumerate_caterpillar_vectors(c)) vectors.push_back(v.signs());
    CHECK(image == vectors);
  }
}

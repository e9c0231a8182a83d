// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   gzono_acceptance [golden_table.txt]

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gzono/flip.hpp"
#include "gzono/ngon.hpp"
#include "gzono/orientation.hpp"
#include "gzono/report.hpp"

using namespace gzono;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

FaceVector fv(std::vector<long> xs) {
  std::vector<BigInt> v(xs.begin(), xs.end());
  return FaceVector(v);
}

Graph pentagon_pair_left() {
  return Graph::from_labels(5, {{1, 2}, {2, 3}, {3, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 5}, {4, 5}});
}
Graph pentagon_pair_right() {
  return Graph::from_labels(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {3, 5}, {2, 4}, {4, 5}});
}

// Connected graphs with 2..6 vertices: a random tree plus random extra edges.
std::vector<Graph> random_graphs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.4);
  std::vector<Graph> out;
  for (int c = 0; c < count; ++c) {
    const int n = 2 + c % 5;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    for (int v = 1; v < n; ++v) {
      const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      edges.emplace_back(u, v);
      present[u][v] = true;
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!present[u][v] && coin(rng)) edges.emplace_back(u, v);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<Graph> flip_suite_graphs() {
  std::vector<Graph> out;
  for (int k = 1; k <= 3; ++k)
    for (auto& g : tree_shape_corpus(k, 1, 3)) out.push_back(std::move(g));
  for (int n = 5; n <= 6; ++n)
    for (auto& g : enumerate_polygon_triangulations(n)) out.push_back(std::move(g));
  return out;
}

EnumOptions corpus_options() {
  // Three-block corpus graphs reach 19 edges, one over the default cap.
  EnumOptions o;
  o.caps.max_edges = 20;
  return o;
}

Outcome golden_table(const std::string& golden_path) {
  Outcome r;
  const std::vector<FaceVector> rows = {
      fv({2, 1}),
      fv({6, 6, 1}),
      fv({18, 28, 12, 1}),
      fv({54, 114, 80, 20, 1}),
      fv({162, 432, 422, 180, 30, 1}),
      fv({486, 1566, 1962, 1190, 350, 42, 1}),
      fv({1458, 5508, 8424, 6640, 2828, 616, 56, 1})};
  const long totals[] = {3, 13, 59, 269, 1227, 5597, 25531};
  for (int n = 2; n <= 8; ++n) {
    const FaceVector f = face_vector_formula(n);
    r.require(f == rows[n - 2], "row n=" + std::to_string(n) + " is " + f.to_string());
    r.require(f.total() == totals[n - 2], "total n=" + std::to_string(n));
  }
  if (!golden_path.empty()) {
    std::ifstream in(golden_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    r.require(in.good() || in.eof(), "cannot read " + golden_path);
    r.require(buf.str() == ngon_table_text(8), "table text differs from " + golden_path);
  }
  return r;
}

Outcome brute_force_agreement(std::vector<Graph>& seen) {
  Outcome r;
  for (int n = 3; n <= 7; ++n) {
    const Graph g = fan_triangulation(n);
    const FaceVector f = face_vector(g);
    r.require(f == face_vector_formula(n), "n=" + std::to_string(n) + " brute " + f.to_string());
    seen.push_back(g);
  }
  return r;
}

Outcome totals_agreement() {
  Outcome r;
  const long totals[] = {3, 13, 59, 269, 1227, 5597, 25531};
  for (int n = 0; n <= 40; ++n) {
    const BigInt m = total_faces_matrix(n);
    r.require(m == total_faces_recurrence(n), "recurrence differs at n=" + std::to_string(n));
    r.require(m == total_faces_closed_sum(n), "closed sum differs at n=" + std::to_string(n));
    if (n <= 6) r.require(m == totals[n], "table total differs at n=" + std::to_string(n));
  }
  return r;
}

Outcome counterexample(std::vector<Graph>& seen) {
  Outcome r;
  const Graph left = pentagon_pair_left(), right = pentagon_pair_right();
  r.require(face_vector(left) == fv({72, 150, 102, 24, 1}), "left graph " + face_vector(left).to_string());
  r.require(face_vector(right) == fv({78, 168, 116, 26, 1}), "right graph " + face_vector(right).to_string());
  r.require(!flip_equivalence_search(left, right, 8).has_value(), "flip path found");
  r.require(!flip_equivalence_search(right, left, 8).has_value(), "reverse flip path found");
  seen.push_back(left);
  seen.push_back(right);
  return r;
}

Outcome flip_suite(std::vector<Graph>& seen, std::size_t& sites) {
  Outcome r;
  const EnumOptions opts = corpus_options();
  for (const auto& g : flip_suite_graphs()) {
    for (const auto& q : find_flip_quads(g)) {
      const auto rep = verify_flip_theorem(g, q, opts);
      ++sites;
      r.require(rep.ok(), "flip " + q.to_string() + " failed on a graph with " + std::to_string(g.edge_count()) +
                              " edges");
    }
    seen.push_back(g);
  }
  r.require(sites > 0, "no flip sites found");
  return r;
}

Outcome oracle_equivalence(std::vector<Graph>& seen) {
  Outcome r;
  auto graphs = random_graphs(20, 2024);
  for (int n = 3; n <= 6; ++n) graphs.push_back(fan_triangulation(n));
  for (const auto& g : graphs) {
    r.require(covector_signs(g) == covector_signs_by_potentials(g),
              "sets differ on a graph with " + std::to_string(g.vertex_count()) + " vertices");
    seen.push_back(g);
  }
  return r;
}

Outcome vertex_count(const std::vector<Graph>& graphs) {
  Outcome r;
  const EnumOptions opts = corpus_options();
  for (const auto& g : graphs) {
    const BigInt acyclic = count_acyclic_orientations(g);
    const FaceVector f = face_vector(g, opts);
    r.require(f[0] == acyclic, "f0 " + f[0].str() + " vs " + acyclic.str());
  }
  return r;
}

Outcome caterpillar_checks() {
  Outcome r;
  const long full[] = {2, 6, 18, 54, 162, 486};
  for (int n = 2; n <= 7; ++n) {
    const Caterpillar c(n);
    long counted = 0;
    for (const auto& x : enumerate_caterpillar_vectors(c)) counted += x.full();
    r.require(counted == full[n - 2], "enumerated full vectors n=" + std::to_string(n));
    r.require(count_full_caterpillar_vectors(n) == full[n - 2], "closed form n=" + std::to_string(n));
  }
  for (int n = 3; n <= 7; ++n) {
    const Graph fan = fan_triangulation(n);
    const Caterpillar c(n);
    for (const auto& x : enumerate_covectors_signs(fan)) {
      const SignVector y = fan_to_caterpillar(c, x.signs());
      if (!is_caterpillar_vector(c, y)) {
        r.require(false, "dual of " + x.signs().to_string() + " is not a vector");
        break;
      }
      r.require(caterpillar_rank(CaterpillarVector(c, y)) == covector_rank(x),
                "rank mismatch at n=" + std::to_string(n) + " for " + x.signs().to_string());
    }
  }
  return r;
}

Outcome flip_class_invariance() {
  Outcome r;
  const std::size_t expected_count[] = {5, 14};
  for (int n = 5; n <= 6; ++n) {
    const auto all = enumerate_polygon_triangulations(n);
    r.require(all.size() == expected_count[n - 5], "triangulation count n=" + std::to_string(n));
    const FaceVector first = face_vector(all.front());
    for (const auto& g : all) r.require(face_vector(g) == first, "face vectors differ at n=" + std::to_string(n));
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string golden = argc > 1 ? argv[1] : "";
  std::vector<Graph> vertex_suite;
  std::size_t sites = 0;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden n-gon table", [&] { return golden_table(golden); }},
      {"brute force equals formula, n = 3..7", [&] { return brute_force_agreement(vertex_suite); }},
      {"totals agree three ways, n = 0..40", [&] { return totals_agreement(); }},
      {"non-equivalent pentagon pair", [&] { return counterexample(vertex_suite); }},
      {"flip bijection on corpus and small triangulations", [&] { return flip_suite(vertex_suite, sites); }},
      {"sign search equals ordered partitions", [&] { return oracle_equivalence(vertex_suite); }},
      {"f0 equals acyclic orientation count", [&] { return vertex_count(vertex_suite); }},
      {"caterpillar counts and ranks", [&] { return caterpillar_checks(); }},
      {"all triangulations share a face vector, n = 5, 6", [&] { return flip_class_invariance(); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  [" << k + 1 << "] " << criteria[k].first;
    if (k == 4) std::cout << " (" << sites << " flip sites)";
    std::cout << "  " << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s";
    if (!r.ok) std::cout << "  -- " << r.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

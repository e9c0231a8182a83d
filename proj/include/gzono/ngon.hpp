#pragma once

// Triangulations of the n-gon, the caterpillar trees dual to the fan
// triangulation, and closed forms for their face counts.

#include <cstdint>
#include <vector>

#include "gzono/bigint.hpp"
#include "gzono/errors.hpp"
#include "gzono/graph.hpp"
#include "gzono/orientation.hpp"

namespace gzono {

/// The n-cycle 1..n plus the chords {1,k}, 3 <= k <= n-1. Edge order: the
/// cycle edges 12, 23, ..., (n-1)n, 1n, then the chords 13, 14, ...
Graph fan_triangulation(int n);

/// Binary caterpillar with leaves 1..n (left to right) and interior path
/// vertices n+1..2n-2. Leaves 1, 2 hang off the first interior vertex,
/// leaves n-1, n off the last, and leaf k off interior vertex k-1 otherwise.
/// For n = 2 the tree is the single edge 12.
class Caterpillar {
 public:
  explicit Caterpillar(int leaves);

  int leaves() const { return leaves_; }
  const Graph& tree() const { return tree_; }

  /// Edge id of leaf l's pendant edge (l is 1-based).
  EdgeId pendant_edge(int leaf) const { return pendant_[leaf - 1]; }

  /// Edge id between interior vertices p_k and p_{k+1}, 1 <= k <= n-3.
  EdgeId path_edge(int k) const { return path_[k - 1]; }

  /// Sign that orients leaf l's pendant edge toward the leaf.
  Sign toward_leaf(int leaf) const;

 private:
  int leaves_;
  Graph tree_;
  std::vector<EdgeId> pendant_;
  std::vector<EdgeId> path_;
};

/// A partial orientation of a caterpillar in which every arc lies on a
/// directed leaf-to-leaf path.
class CaterpillarVector {
 public:
  CaterpillarVector(const Caterpillar& tree, SignVector signs);

  const Caterpillar& tree() const { return *tree_; }
  const SignVector& signs() const { return signs_; }

  /// reach[i] has bit j when leaf j+1 is reachable from leaf i+1 by a directed path.
  std::vector<std::uint64_t> reachability() const;

  /// Weakly connected components of the leaf reachability digraph, isolated leaves included.
  int reach_components() const;

  bool full() const { return signs_.zero_mask() == 0; }

 private:
  const Caterpillar* tree_;
  SignVector signs_;
};

/// Every interior vertex has an incoming arc iff it has an outgoing one.
bool is_caterpillar_vector(const Caterpillar& tree, const SignVector& signs);

/// All vectors in lexicographic sign order. Throws CapExceeded above caps.max_caterpillar_leaves.
std::vector<CaterpillarVector> enumerate_caterpillar_vectors(const Caterpillar& tree, const Caps& caps = {});

/// n - b0(Gamma_X).
int caterpillar_rank(const CaterpillarVector& x);

BigInt count_full_caterpillar_vectors(int n);

/// Face vector of the graphical zonotope of any triangulation of the n-gon, n >= 2.
FaceVector face_vector_formula(int n);

/// Total face count of a triangulation of the (n+2)-gon, three ways.
BigInt total_faces_matrix(int n);
BigInt total_faces_recurrence(int n);
BigInt total_faces_closed_sum(int n);

/// Caterpillar vectors counted by the state of leaf n's pendant edge.
struct CountTriple {
  BigInt unoriented;
  BigInt toward;  // oriented into leaf n
  BigInt away;    // oriented out of leaf n

  BigInt total() const { return unoriented + toward + away; }
  friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

CountTriple count_triples(int n);

/// The triple measured by enumerating caterpillar vectors.
CountTriple classify_caterpillar_vectors(const Caterpillar& tree, const Caps& caps = {});

/// Skeleton graphs of all Catalan(n-2) triangulations of the convex n-gon.
std::vector<Graph> enumerate_polygon_triangulations(int n, const Caps& caps = {});

/// Maps a partial orientation of fan_triangulation(n) to the caterpillar via
/// planar duality: boundary edge {j, j+1} to leaf j's pendant edge, {n, 1} to
/// leaf n's, chord {1, k} to the path edge separating leaves 1..k-1 from k..n.
/// Each dual edge is oriented from the face left of the primal arc to the face
/// on its right (vertices counterclockwise).
SignVector fan_to_caterpillar(const Caterpillar& tree, const SignVector& fan_signs);

}  // namespace gzono

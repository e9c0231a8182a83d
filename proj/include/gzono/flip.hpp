#pragma once

// Quadrilateral flips on graphs.
//
// A flip site is an induced 4-cycle v1 v2 v3 v4 with the single diagonal
// v2v4, such that every component of G - {v1..v4} attaches to the quad only
// through one side pair {v_i, v_{i+1}} (v5 = v1). The flip deletes v2v4 and
// adds v1v3. The new edge reuses the id of the deleted one, so every other
// edge keeps its id and a partial orientation of G carries over to G' off
// the quad.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gzono/errors.hpp"
#include "gzono/graph.hpp"
#include "gzono/orientation.hpp"

namespace gzono {

struct FlipQuad {
  std::array<int, 4> v{};  // v1..v4, 0-based
  // Per vertex of the host: 0 for quad vertices, else the side 1..4 of its component.
  std::vector<int> side;

  /// "(v1,v2,v3,v4)" with 1-based labels.
  std::string to_string() const;

  friend bool operator==(const FlipQuad&, const FlipQuad&) = default;
};

/// Builds the quad (v1..v4) in g, with the smallest admissible side for every
/// component. Returns nullopt when the vertices do not form a flip site.
std::optional<FlipQuad> make_flip_quad(const Graph& g, std::array<int, 4> v);

/// Checks every structural condition, including the recorded side witness.
bool is_valid_flip_quad(const Graph& g, const FlipQuad& q);

/// All flip sites, one per geometric flip, labeled so that v1 < v3 and v2 < v4.
std::vector<FlipQuad> find_flip_quads(const Graph& g);

/// G' = G - v2v4 + v1v3. Throws PreconditionError if q is not valid in g.
Graph apply_flip(const Graph& g, const FlipQuad& q);

/// (v2, v3, v4, v1) with sides carried along; a valid site of apply_flip(g, q)
/// whose flip restores g.
FlipQuad mirrored_quad(const FlipQuad& q);

/// (v2, v1, v4, v3) with sides carried along. Also undoes the flip, and its
/// covector bijection is the inverse of q's.
FlipQuad inverse_quad(const FlipQuad& q);

struct FlipPath {
  Graph start;
  std::vector<FlipQuad> steps;
  Graph end;
};

/// Breadth-first search over labeled graphs. Returns a shortest flip sequence
/// from g1 to g2 using at most max_depth flips, or nullopt.
std::optional<FlipPath> flip_equivalence_search(const Graph& g1, const Graph& g2, int max_depth);

/// Maps a covector of g to a covector of apply_flip(g, q) of the same rank.
/// Edge ids are shared between the two graphs. Throws PreconditionError when
/// x is not a covector on the quad or the forced diagonal sign is ambiguous.
SignVector flip_bijection(const Graph& g, const FlipQuad& q, const SignVector& x);

/// Same map on a bound orientation; the result is bound to `flipped`, which
/// must equal apply_flip(x.host(), q).
PartialOrientation flip_bijection(const PartialOrientation& x, const FlipQuad& q, const Graph& flipped);

struct FlipTheoremReport {
  FaceVector before;
  FaceVector after;
  std::size_t covectors_before = 0;
  std::size_t covectors_after = 0;
  bool face_vectors_equal = false;
  bool injective = false;
  bool rank_preserving = false;
  bool image_is_covector_set = false;
  bool inverse_is_identity = false;

  bool ok() const {
    return face_vectors_equal && injective && rank_preserving && image_is_covector_set &&
           inverse_is_identity;
  }
};

/// Enumerates both covector sets and checks the bijection exhaustively.
FlipTheoremReport verify_flip_theorem(const Graph& g, const FlipQuad& q, const EnumOptions& opts = {});

/// Deterministic block-tree graphs made of k quad blocks (4-cycle plus a
/// diagonal), each later block hanging off an earlier one by a bridge or by
/// two edges to one side of its quad. 1 <= k <= 6.
std::vector<Graph> tree_shape_corpus(int k, std::uint64_t seed, int count = 1);

}  // namespace gzono

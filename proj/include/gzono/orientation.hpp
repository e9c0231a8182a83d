#pragma once

// Partial orientations of a graph and the graphic oriented matroid built on them.
//
// A partial orientation assigns each edge a sign: zero (unoriented), plus
// (oriented along the canonical direction u -> v, u < v) or minus. Covectors
// are the partial orientations orthogonal to every directed circuit; their
// poset is anti-isomorphic to the face poset of the graphical zonotope, with
// the face of a covector X having dimension r(X^0).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gzono/bigint.hpp"
#include "gzono/errors.hpp"
#include "gzono/graph.hpp"

namespace gzono {

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
char sign_char(Sign s);

/// Per-edge signs packed into two masks. Ordered lexicographically by edge id
/// with zero < plus < minus.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t size);
  SignVector(std::size_t size, std::uint64_t plus, std::uint64_t minus);

  /// Parses a string over {'0', '+', '-'}.
  static SignVector parse(const std::string& text);

  std::size_t size() const { return size_; }
  Sign operator[](std::size_t e) const {
    if ((plus_ >> e) & 1U) return Sign::plus;
    if ((minus_ >> e) & 1U) return Sign::minus;
    return Sign::zero;
  }
  void set(std::size_t e, Sign s);

  std::uint64_t plus_mask() const { return plus_; }
  std::uint64_t minus_mask() const { return minus_; }
  std::uint64_t support_mask() const { return plus_ | minus_; }
  std::uint64_t zero_mask() const;

  SignVector operator-() const { return {size_, minus_, plus_}; }
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b);

 private:
  std::size_t size_ = 0;
  std::uint64_t plus_ = 0;
  std::uint64_t minus_ = 0;
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& s) const noexcept;
};

/// Signs over the edges of a host graph. The host must outlive the orientation.
class PartialOrientation {
 public:
  PartialOrientation(const Graph& host, SignVector signs);
  static PartialOrientation zero(const Graph& host) { return {host, SignVector(host.edge_count())}; }

  const Graph& host() const { return *host_; }
  const SignVector& signs() const { return signs_; }
  Sign operator[](EdgeId e) const { return signs_[e]; }

  /// X^0, the unoriented edges.
  EdgeSubset zero_set() const { return {*host_, signs_.zero_mask()}; }

  friend bool operator==(const PartialOrientation& a, const PartialOrientation& b) {
    return a.host_ == b.host_ && a.signs_ == b.signs_;
  }

 private:
  const Graph* host_;
  SignVector signs_;
};

/// Face counts f_0..f_d of a zonotope; f_d = 1 is the zonotope itself.
class FaceVector {
 public:
  FaceVector() = default;
  explicit FaceVector(std::vector<BigInt> counts);

  std::size_t dimension() const { return counts_.empty() ? 0 : counts_.size() - 1; }
  std::size_t size() const { return counts_.size(); }
  const BigInt& operator[](std::size_t k) const { return counts_[k]; }
  std::span<const BigInt> counts() const { return counts_; }
  BigInt total() const;

  /// "(6, 6, 1)"
  std::string to_string() const;

  friend bool operator==(const FaceVector&, const FaceVector&) = default;

 private:
  std::vector<BigInt> counts_;
};

/// Disjoint nonempty blocks covering the vertex set; block order matters.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
};

/// Edge ij gets the sign of (block(j) - block(i)): plus when i's block comes first.
SignVector covector_of(const Graph& g, const OrderedPartition& p);

bool is_orthogonal(const PartialOrientation& x, const Cycle& c);
bool is_covector(const PartialOrientation& x, std::size_t max_cycles = Caps{}.max_cycles);
bool is_vector(const PartialOrientation& x);

/// r(G) - r(X^0). Throws PreconditionError for non-covectors.
int covector_rank(const PartialOrientation& x, std::size_t max_cycles = Caps{}.max_cycles);

/// Depth-first sign assignment with exact feasibility pruning; results in
/// lexicographic sign order. Requires a connected host with m <= caps.max_edges.
std::vector<PartialOrientation> enumerate_covectors_signs(const Graph& g, const EnumOptions& opts = {});
std::vector<SignVector> covector_signs(const Graph& g, const EnumOptions& opts = {});

/// Ordered-partition oracle: every ordered partition's sign pattern, deduplicated
/// and sorted. Requires a connected host with n <= caps.max_partition_vertices.
std::vector<PartialOrientation> enumerate_covectors_potentials(const Graph& g, const EnumOptions& opts = {});
std::vector<SignVector> covector_signs_by_potentials(const Graph& g, const EnumOptions& opts = {});

/// f_k = number of covectors X with r(X^0) = k, computed without materializing the list.
FaceVector face_vector(const Graph& g, const EnumOptions& opts = {});

/// Face vector of a connected graph from an explicit covector list.
FaceVector face_vector_of(const Graph& g, std::span<const SignVector> covectors);

/// |chi_G(-1)| by deletion-contraction of the chromatic polynomial.
BigInt count_acyclic_orientations(const Graph& g);

}  // namespace gzono

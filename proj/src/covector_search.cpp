// Sign-space covector search.
//
// A sign assignment on a prefix of the edges extends to a covector exactly
// when it is realized by some vertex potential: contract the zero edges, and
// the oriented edges must then form an acyclic digraph with no arc inside a
// contracted class. The search keeps that quotient incrementally (class
// masks plus strict "above" closures) so every pruned branch is a dead one
// and every surviving leaf is a covector.

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "gzono/orientation.hpp"

namespace gzono {

namespace {

class PotentialState {
 public:
  explicit PotentialState(int n) : n_(n), cls_(n), above_(n, 0), classes_(n) {
    for (int v = 0; v < n; ++v) cls_[v] = std::uint64_t{1} << v;
  }

  int classes() const { return classes_; }

  // Imposes p(lo) < p(hi). Returns false when infeasible.
  bool order(int lo, int hi) {
    if ((cls_[lo] >> hi) & 1U) return false;
    if ((above_[hi] >> lo) & 1U) return false;
    if ((above_[lo] >> hi) & 1U) return true;
    const std::uint64_t add = cls_[hi] | above_[hi];
    for (int x = 0; x < n_; ++x)
      if (((cls_[lo] >> x) & 1U) || ((above_[x] >> lo) & 1U)) above_[x] |= add;
    return true;
  }

  // Imposes p(a) == p(b).
  bool merge(int a, int b) {
    if (((above_[a] >> b) & 1U) || ((above_[b] >> a) & 1U)) return false;
    if ((cls_[a] >> b) & 1U) return true;
    const std::uint64_t joined = cls_[a] | cls_[b];
    const std::uint64_t up = above_[a] | above_[b];
    for (int x = 0; x < n_; ++x) {
      if ((joined >> x) & 1U) {
        cls_[x] = joined;
        above_[x] = up;
      } else if ((above_[x] & joined) != 0) {
        above_[x] |= joined | up;
      }
    }
    --classes_;
    return true;
  }

  bool assign(const Edge& e, Sign s) {
    switch (s) {
      case Sign::zero: return merge(e.u, e.v);
      case Sign::plus: return order(e.u, e.v);
      case Sign::minus: return order(e.v, e.u);
    }
    return false;
  }

 private:
  int n_;
  std::vector<std::uint64_t> cls_;
  std::vector<std::uint64_t> above_;
  int classes_;
};

constexpr Sign kBranchOrder[3] = {Sign::zero, Sign::plus, Sign::minus};

// Walks the feasible subtree below `prefix`, calling sink(signs, zero_rank) at
// full depth, or at `stop_depth` when that is smaller than m.
template <class Sink>
void walk(const Graph& g, const SignVector& prefix, std::size_t prefix_len, std::size_t stop_depth,
          Sink&& sink) {
  const int n = g.vertex_count();
  PotentialState root(n);
  for (std::size_t e = 0; e < prefix_len; ++e)
    if (!root.assign(g.edge(e), prefix[e])) return;

  std::vector<PotentialState> stack(stop_depth + 1, root);
  SignVector current = prefix;
  auto descend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == stop_depth) {
      sink(current, n - stack[depth].classes());
      return;
    }
    for (Sign s : kBranchOrder) {
      stack[depth + 1] = stack[depth];
      if (!stack[depth + 1].assign(g.edge(depth), s)) continue;
      current.set(depth, s);
      self(self, depth + 1);
    }
    current.set(depth, Sign::zero);
  };
  descend(descend, prefix_len);
}

void check_domain(const Graph& g, const EnumOptions& opts) {
  if (!connected(g)) throw PreconditionError("covector enumeration: host graph is disconnected");
  if (g.edge_count() > opts.caps.max_edges)
    throw CapExceeded("covector enumeration: " + std::to_string(g.edge_count()) +
                      " edges exceeds cap " + std::to_string(opts.caps.max_edges));
}

// Splits the top of the search tree into prefixes, runs each subtree (in
// parallel when asked) into its own sink, and returns the sinks in prefix
// order so merged output is independent of the thread count.
template <class Sink>
std::vector<Sink> run_partitioned(const Graph& g, unsigned threads) {
  const std::size_t m = g.edge_count();
  if (threads <= 1 || m < 4) {
    std::vector<Sink> one(1);
    walk(g, SignVector(m), 0, m, one[0]);
    return one;
  }
  std::size_t split = 0;
  for (std::size_t width = 1; split < m && width < 16 * static_cast<std::size_t>(threads); ++split)
    width *= 3;

  std::vector<SignVector> prefixes;
  walk(g, SignVector(m), 0, split, [&](const SignVector& s, int) { prefixes.push_back(s); });

  std::vector<Sink> sinks(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < prefixes.size(); k = next++)
      walk(g, prefixes[k], split, m, sinks[k]);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return sinks;
}

struct CollectSink {
  std::vector<SignVector> out;
  void operator()(const SignVector& s, int) { out.push_back(s); }
};

struct TallySink {
  std::vector<std::uint64_t> counts = std::vector<std::uint64_t>(kMaxVertices + 1, 0);
  void operator()(const SignVector&, int zero_rank) { ++counts[zero_rank]; }
};

}  // namespace

std::vector<SignVector> covector_signs(const Graph& g, const EnumOptions& opts) {
  check_domain(g, opts);
  auto parts = run_partitioned<CollectSink>(g, opts.threads);
  if (parts.size() == 1) return std::move(parts[0].out);
  std::vector<SignVector> out;
  for (auto& p : parts) out.insert(out.end(), p.out.begin(), p.out.end());
  return out;
}

FaceVector face_vector(const Graph& g, const EnumOptions& opts) {
  check_domain(g, opts);
  const auto parts = run_partitioned<TallySink>(g, opts.threads);
  const int d = rank_of_mask(g, g.all_edges_mask());
  std::vector<BigInt> counts(d + 1, 0);
  for (const auto& p : parts)
    for (int k = 0; k <= d; ++k) counts[k] += p.counts[k];
  return FaceVector(std::move(counts));
}

}  // namespace gzono

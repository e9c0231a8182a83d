#include "gzono/orientation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

namespace gzono {

char sign_char(Sign s) {
  switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    case Sign::zero: break;
  }
  return '0';
}

SignVector::SignVector(std::size_t size) : size_(size) {
  if (size > kMaxEdges) throw PreconditionError("sign vector longer than 64 edges");
}

SignVector::SignVector(std::size_t size, std::uint64_t plus, std::uint64_t minus)
    : size_(size), plus_(plus), minus_(minus) {
  if (size > kMaxEdges) throw PreconditionError("sign vector longer than 64 edges");
  if ((plus & minus) != 0) throw PreconditionError("edge signed both plus and minus");
}

SignVector SignVector::parse(const std::string& text) {
  SignVector s(text.size());
  for (std::size_t e = 0; e < text.size(); ++e) {
    switch (text[e]) {
      case '+': s.set(e, Sign::plus); break;
      case '-': s.set(e, Sign::minus); break;
      case '0': break;
      default: throw ParseError(std::string("bad sign character '") + text[e] + "'");
    }
  }
  return s;
}

void SignVector::set(std::size_t e, Sign s) {
  const std::uint64_t bit = std::uint64_t{1} << e;
  plus_ &= ~bit;
  minus_ &= ~bit;
  if (s == Sign::plus) plus_ |= bit;
  if (s == Sign::minus) minus_ |= bit;
}

std::uint64_t SignVector::zero_mask() const {
  const std::uint64_t all = size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
  return all & ~support_mask();
}

std::string SignVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t e = 0; e < size_; ++e) out[e] = sign_char((*this)[e]);
  return out;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
  const std::uint64_t diff = (a.plus_ ^ b.plus_) | (a.minus_ ^ b.minus_);
  if (diff == 0) return a.size_ <=> b.size_;
  const auto e = static_cast<std::size_t>(std::countr_zero(diff));
  auto key = [e](const SignVector& s) {
    switch (s[e]) {
      case Sign::zero: return 0;
      case Sign::plus: return 1;
      case Sign::minus: return 2;
    }
    return 0;
  };
  return key(a) <=> key(b);
}

std::size_t SignVectorHash::operator()(const SignVector& s) const noexcept {
  std::uint64_t h = s.plus_mask() * 0x9E3779B97F4A7C15ULL;
  h ^= s.minus_mask() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h ^ s.size());
}

PartialOrientation::PartialOrientation(const Graph& host, SignVector signs)
    : host_(&host), signs_(signs) {
  if (signs_.size() != host.edge_count())
    throw PreconditionError("sign vector length does not match host edge count");
}

FaceVector::FaceVector(std::vector<BigInt> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw PreconditionError("face vector must have at least one entry");
  if (counts_.back() != 1) throw PreconditionError("face vector must end in the improper face 1");
  if (counts_.front() < 1) throw PreconditionError("face vector needs at least one vertex");
  for (const auto& c : counts_)
    if (c < 0) throw PreconditionError("negative face count");
}

BigInt FaceVector::total() const {
  BigInt sum = 0;
  for (const auto& c : counts_) sum += c;
  return sum;
}

std::string FaceVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k > 0) out += ", ";
    out += counts_[k].str();
  }
  return out + ")";
}

SignVector covector_of(const Graph& g, const OrderedPartition& p) {
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int v : p.blocks[b]) {
      if (v < 0 || v >= g.vertex_count() || position[v] != -1)
        throw PreconditionError("ordered partition blocks must partition the vertex set");
      position[v] = static_cast<int>(b);
    }
  if (std::find(position.begin(), position.end(), -1) != position.end())
    throw PreconditionError("ordered partition does not cover every vertex");
  SignVector s(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (position[ed.u] < position[ed.v]) s.set(e, Sign::plus);
    if (position[ed.u] > position[ed.v]) s.set(e, Sign::minus);
  }
  return s;
}

bool is_orthogonal(const PartialOrientation& x, const Cycle& c) {
  bool agree = false;
  bool disagree = false;
  for (std::size_t k = 0; k < c.length(); ++k) {
    const Sign s = x[c.edges[k]];
    if (s == Sign::zero) continue;
    if (static_cast<int>(s) == c.signs[k])
      agree = true;
    else
      disagree = true;
  }
  return agree == disagree;
}

bool is_covector(const PartialOrientation& x, std::size_t max_cycles) {
  const auto cycles = enumerate_cycles(x.host(), max_cycles);
  return std::all_of(cycles.begin(), cycles.end(),
                     [&](const Cycle& c) { return is_orthogonal(x, c); });
}

bool is_vector(const PartialOrientation& x) {
  const Graph& g = x.host();
  const int n = g.vertex_count();
  // out[v]: heads of arcs leaving v
  std::vector<std::uint64_t> out(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (x[e] == Sign::plus) out[ed.u] |= std::uint64_t{1} << ed.v;
    if (x[e] == Sign::minus) out[ed.v] |= std::uint64_t{1} << ed.u;
  }
  auto reaches = [&](int from, int to) {
    std::uint64_t seen = std::uint64_t{1} << from;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto bits = frontier; bits != 0; bits &= bits - 1) next |= out[std::countr_zero(bits)];
      frontier = next & ~seen;
      seen |= next;
    }
    return ((seen >> to) & 1U) != 0;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (x[e] == Sign::plus && !reaches(ed.v, ed.u)) return false;
    if (x[e] == Sign::minus && !reaches(ed.u, ed.v)) return false;
  }
  return true;
}

int covector_rank(const PartialOrientation& x, std::size_t max_cycles) {
  if (!is_covector(x, max_cycles)) throw PreconditionError("covector_rank: not a covector");
  const Graph& g = x.host();
  return rank_of_mask(g, g.all_edges_mask()) - rank_of_mask(g, x.signs().zero_mask());
}

namespace {

void require_connected(const Graph& g, const char* who) {
  if (!connected(g)) throw PreconditionError(std::string(who) + ": host graph is disconnected");
}

std::vector<PartialOrientation> bind_host(const Graph& g, const std::vector<SignVector>& signs) {
  std::vector<PartialOrientation> out;
  out.reserve(signs.size());
  for (const auto& s : signs) out.emplace_back(g, s);
  return out;
}

}  // namespace

std::vector<PartialOrientation> enumerate_covectors_signs(const Graph& g, const EnumOptions& opts) {
  return bind_host(g, covector_signs(g, opts));
}

std::vector<SignVector> covector_signs_by_potentials(const Graph& g, const EnumOptions& opts) {
  require_connected(g, "enumerate_covectors_potentials");
  const int n = g.vertex_count();
  if (static_cast<std::size_t>(n) > opts.caps.max_partition_vertices)
    throw CapExceeded("ordered-partition oracle: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(opts.caps.max_partition_vertices));

  std::unordered_set<SignVector, SignVectorHash> seen;
  std::vector<int> block_of(n, 0);
  std::vector<int> order;

  auto emit_all_orders = [&](int blocks) {
    order.resize(blocks);
    std::iota(order.begin(), order.end(), 0);
    do {
      SignVector s(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const int pu = order[block_of[ed.u]];
        const int pv = order[block_of[ed.v]];
        if (pu < pv) s.set(e, Sign::plus);
        if (pu > pv) s.set(e, Sign::minus);
      }
      seen.insert(s);
    } while (std::next_permutation(order.begin(), order.end()));
  };

  // Set partitions as restricted growth strings, then every order of their blocks.
  auto grow = [&](auto&& self, int v, int blocks) -> void {
    if (v == n) {
      emit_all_orders(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block_of[v] = b;
      self(self, v + 1, std::max(blocks, b + 1));
    }
  };
  grow(grow, 0, 0);

  std::vector<SignVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialOrientation> enumerate_covectors_potentials(const Graph& g, const EnumOptions& opts) {
  return bind_host(g, covector_signs_by_potentials(g, opts));
}

FaceVector face_vector_of(const Graph& g, std::span<const SignVector> covectors) {
  require_connected(g, "face_vector");
  const int d = rank_of_mask(g, g.all_edges_mask());
  std::vector<BigInt> counts(d + 1, 0);
  for (const auto& x : covectors) ++counts[rank_of_mask(g, x.zero_mask())];
  return FaceVector(std::move(counts));
}

namespace {

std::uint64_t drop_bit(std::uint64_t mask, int v) {
  const std::uint64_t low = mask & ((std::uint64_t{1} << v) - 1);
  const std::uint64_t high = v >= 63 ? 0 : (mask >> (v + 1)) << v;
  return low | high;
}

std::vector<std::uint64_t> remove_vertex(const std::vector<std::uint64_t>& adj, int v) {
  std::vector<std::uint64_t> out;
  out.reserve(adj.size() - 1);
  for (std::size_t x = 0; x < adj.size(); ++x)
    if (static_cast<int>(x) != v) out.push_back(drop_bit(adj[x], v));
  return out;
}

// Chromatic polynomial evaluated at -1.
class ChromaticAtMinusOne {
 public:
  BigInt operator()(std::vector<std::uint64_t> adj) {
    BigInt factor = 1;
    // Peel isolated vertices (factor x) and leaves (factor x - 1).
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = 0; v < adj.size(); ++v) {
        const int deg = std::popcount(adj[v]);
        if (deg <= 1) {
          factor *= deg == 0 ? -1 : -2;
          adj = remove_vertex(adj, static_cast<int>(v));
          changed = true;
          break;
        }
      }
    }
    if (adj.empty()) return factor;
    if (auto it = memo_.find(adj); it != memo_.end()) return factor * it->second;

    int u = 0;
    for (std::size_t v = 1; v < adj.size(); ++v)
      if (std::popcount(adj[v]) > std::popcount(adj[u])) u = static_cast<int>(v);
    const int w = std::countr_zero(adj[u]);

    auto deleted = adj;
    deleted[u] &= ~(std::uint64_t{1} << w);
    deleted[w] &= ~(std::uint64_t{1} << u);

    auto merged = deleted;
    merged[u] |= merged[w];
    for (auto bits = merged[w]; bits != 0; bits &= bits - 1)
      merged[std::countr_zero(bits)] |= std::uint64_t{1} << u;
    auto contracted = remove_vertex(merged, w);

    BigInt value = (*this)(std::move(deleted)) - (*this)(std::move(contracted));
    memo_.emplace(std::move(adj), value);
    return factor * value;
  }

 private:
  std::map<std::vector<std::uint64_t>, BigInt> memo_;
};

}  // namespace

BigInt count_acyclic_orientations(const Graph& g) {
  require_connected(g, "count_acyclic_orientations");
  std::vector<std::uint64_t> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbor_mask(v);
  BigInt value = ChromaticAtMinusOne{}(std::move(adj));
  return value < 0 ? BigInt(-value) : value;
}

}  // namespace gzono

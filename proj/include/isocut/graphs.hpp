#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isocut {

inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;

/// The pair (L, n) identifying the Hamming graph K_L^n.
class HammingParams {
public:
  /// Throws DomainError when L < 2 or n < 1, OverflowError when L^n does not
  /// fit in 64 bits.
  HammingParams(std::uint64_t arity, std::uint32_t dimension);

  std::uint64_t arity() const { return arity_; }
  std::uint32_t dimension() const { return dimension_; }

  /// L^n.
  std::uint64_t vertex_count() const { return vertex_count_; }
  /// floor(L^n / 2), the largest size of the smaller side of a bipartition.
  std::uint64_t half() const { return vertex_count_ / 2; }
  /// (L-1) n.
  std::uint64_t degree() const { return degree_; }
  /// L^floor(n/2), end of the first increasing interval of xi.
  std::uint64_t first_interval_end() const;
  /// L^e for 0 <= e <= n.
  std::uint64_t power(std::uint32_t exponent) const;

  friend bool operator==(const HammingParams&, const HammingParams&) = default;

private:
  std::uint64_t arity_;
  std::uint32_t dimension_;
  std::uint64_t vertex_count_;
  std::uint64_t degree_;
};

enum class MatchingPolicy { identity, reversal, seeded_random };

std::string to_string(MatchingPolicy policy);
MatchingPolicy parse_matching_policy(const std::string& text);

/// Provenance of a graph: hamming(L,n), bc(n,policy,seed) or custom.
struct GraphLabel {
  enum class Kind { hamming, bc, custom };

  Kind kind = Kind::custom;
  std::uint64_t arity = 0;
  std::uint32_t dimension = 0;
  MatchingPolicy policy = MatchingPolicy::identity;
  std::uint64_t seed = 0;

  static GraphLabel hamming(const HammingParams& params);
  static GraphLabel bc(std::uint32_t n, MatchingPolicy policy, std::uint64_t seed);
  static GraphLabel custom() { return {}; }

  std::string to_string() const;
  static GraphLabel parse(const std::string& text);

  friend bool operator==(const GraphLabel&, const GraphLabel&) = default;
};

/// Immutable simple undirected graph on dense ids 0..N-1 with sorted
/// adjacency lists (compressed row storage).
class Graph {
public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  /// Builds from an edge list. Throws DomainError on self-loops, duplicate
  /// edges or out-of-range endpoints.
  Graph(std::uint32_t vertex_count, std::vector<Edge> edges, GraphLabel label);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint64_t edge_count() const { return neighbors_.size() / 2; }
  const GraphLabel& label() const { return label_; }

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t min_degree() const;
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  bool is_regular(std::uint32_t degree) const;
  bool is_connected() const;

  /// Edges (u, v) with u < v in sorted order.
  std::vector<Edge> edges() const;

  /// Adjacency rows as 64-bit masks; requires vertex_count() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.offsets_ == b.offsets_ &&
           a.neighbors_ == b.neighbors_;
  }

private:
  Graph(std::uint32_t vertex_count, std::vector<std::uint64_t> offsets,
        std::vector<std::uint32_t> neighbors, GraphLabel label);

  friend Graph hamming_graph(const HammingParams&, std::uint64_t);

  std::uint32_t vertex_count_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
  GraphLabel label_;
};

/// K_L^n: ids are the L-base strings read as integers; adjacent iff the
/// strings differ in exactly one coordinate.
Graph hamming_graph(const HammingParams& params,
                    std::uint64_t vertex_cap = kDefaultVertexCap);

/// Bijective-connection network built by recursive doubling: B_1 is an edge,
/// B_k joins two copies of B_{k-1} with a perfect matching picked by policy.
/// seeded_random draws permutations from std::mt19937_64 with an explicit
/// rejection-sampled Fisher-Yates shuffle, so output is identical on every
/// conforming platform.
Graph bc_network(std::uint32_t n, MatchingPolicy policy, std::uint64_t seed = 0,
                 std::uint64_t vertex_cap = kDefaultVertexCap);

/// Digits of a vertex id in base L, most significant first (x_n ... x_1).
class VertexString {
public:
  VertexString(std::uint64_t arity, std::vector<std::uint64_t> digits);

  std::uint64_t arity() const { return arity_; }
  std::span<const std::uint64_t> digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }

  /// Digits as characters 0-9a-z when L <= 36, dot-separated otherwise.
  std::string to_string() const;
  static VertexString parse(const std::string& text, std::uint64_t arity);

  friend bool operator==(const VertexString&, const VertexString&) = default;

private:
  std::uint64_t arity_;
  std::vector<std::uint64_t> digits_;
};

VertexString encode(std::uint64_t id, const HammingParams& params);
std::uint64_t decode(const VertexString& s, const HammingParams& params);

/// Most-significant-digit-first comparison; agrees with comparing decoded ids.
std::strong_ordering lex_compare(const VertexString& a, const VertexString& b);

/// Edge-list text format: header `# vertices=N edges=M label=...` then one
/// `u v` line per edge with u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& graph);
Graph read_edge_list(std::istream& in);

} // namespace isocut

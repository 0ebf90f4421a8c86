#pragma once

#include <cstdint>
#include <vector>

#include "isocut/closedform.hpp"
#include "isocut/graphs.hpp"
#include "isocut/vertex_set.hpp"

namespace isocut {

/// A sub-layer: fixed leading digits followed by free_dimensions free
/// coordinates, i.e. the id block [first_id, first_id + L^free_dimensions).
struct SubLayerDescriptor {
  std::vector<std::uint64_t> prefix; // n - free_dimensions digits, most significant first
  std::uint32_t free_dimensions;
  std::uint64_t first_id;
  std::uint64_t size;

  /// "0020", "00XX", ...
  std::string pattern(std::uint64_t arity) const;
  bool contains(std::uint64_t id) const { return id >= first_id && id - first_id < size; }
};

/// Edge bookkeeping of a family decomposition, either counted on a graph or
/// predicted from the decomposition alone.
struct FamilyCensus {
  std::uint64_t within_sublayers = 0; // edges inside individual sub-layers
  std::uint64_t within_families = 0;  // edges between sub-layers of one family
  std::uint64_t across_families = 0;  // edges between different families

  std::uint64_t total() const { return within_sublayers + within_families + across_families; }
  friend bool operator==(const FamilyCensus&, const FamilyCensus&) = default;
};

/// The families C^0..C^s for m = sum a_i L^{b_i}: family i holds a_i
/// sub-layers of dimension b_i. Together they tile the ids 0..m-1.
class SubLayerFamily {
public:
  SubLayerFamily(HammingParams params, LBaseDecomposition decomposition,
                 std::vector<std::vector<SubLayerDescriptor>> families);

  const HammingParams& params() const { return params_; }
  const LBaseDecomposition& decomposition() const { return decomposition_; }
  const std::vector<std::vector<SubLayerDescriptor>>& families() const { return families_; }

  std::uint64_t member_count() const;
  VertexSet members() const;

  /// Edge counts read off the decomposition: (L-1) b_i L^{b_i} / 2 per
  /// sub-layer, I_{a_i} L^{b_i} per family, a_i a_k L^{b_k} per family pair.
  FamilyCensus predicted_census() const;
  /// Same quantities counted edge by edge on a materialised K_L^n.
  FamilyCensus counted_census(const Graph& graph) const;

private:
  HammingParams params_;
  LBaseDecomposition decomposition_;
  std::vector<std::vector<SubLayerDescriptor>> families_;
};

/// Full evaluation of the bipartition (set, complement).
struct CutReport {
  std::uint64_t set_size = 0;
  std::uint64_t cut_size = 0;
  std::uint64_t internal_edges = 0;
  std::uint64_t complement_internal_edges = 0;
  bool side_connected = false;
  bool complement_connected = false;
  std::vector<std::uint64_t> side_component_sizes;       // descending
  std::vector<std::uint64_t> complement_component_sizes; // descending

  friend bool operator==(const CutReport&, const CutReport&) = default;
};

/// The first m ids {0, ..., m-1}, i.e. the first m L-base strings in
/// lexicographic order. Requires 1 <= m <= floor(L^n / 2) and L^n within
/// vertex_cap.
VertexSet optimal_set(std::uint64_t m, const HammingParams& params,
                      std::uint64_t vertex_cap = kDefaultVertexCap);

/// Sub-layer families of optimal_set(m), built by the prefix-mutation rule:
/// the digit at position b_k+1 is a_k for every earlier family k, the digit
/// at b_i+1 counts the sub-layer within family i, all other fixed digits 0.
SubLayerFamily sublayer_family(std::uint64_t m, const HammingParams& params);

/// Exact census by edge scan and traversal. Throws DomainError for an empty
/// or full set or a universe that does not match the graph.
CutReport evaluate_cut(const Graph& graph, const VertexSet& set);

/// Census of every numeric prefix {0..m-1}, 1 <= m < N, in one incremental
/// sweep: edge counts accumulate per added vertex and connectivity of both
/// sides comes from union-find passes forwards and backwards. Entry m-1 holds
/// prefix m. Component size lists are left empty.
std::vector<CutReport> prefix_cut_profile(const Graph& graph);

/// Same sweep on K_L^n with neighbours generated from the digits, so the
/// graph is never materialised. Memory is linear in L^n. Throws OverflowError
/// above vertex_cap.
std::vector<CutReport> prefix_cut_profile(const HammingParams& params,
                                          std::uint64_t vertex_cap = kDefaultVertexCap);

} // namespace isocut

#include "isocut/construct.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "isocut/checked.hpp"
#include "isocut/error.hpp"

namespace isocut {

std::string SubLayerDescriptor::pattern(std::uint64_t arity) const {
  std::string out = VertexString(arity, prefix).to_string();
  if (arity > 36 && !prefix.empty() && free_dimensions > 0) {
    out.push_back('.');
  }
  for (std::uint32_t i = 0; i < free_dimensions; ++i) {
    out.push_back('X');
    if (arity > 36 && i + 1 < free_dimensions) {
      out.push_back('.');
    }
  }
  return out;
}

SubLayerFamily::SubLayerFamily(HammingParams params, LBaseDecomposition decomposition,
                               std::vector<std::vector<SubLayerDescriptor>> families)
    : params_(params), decomposition_(std::move(decomposition)),
      families_(std::move(families)) {}

std::uint64_t SubLayerFamily::member_count() const {
  std::uint64_t total = 0;
  for (const auto& family : families_) {
    for (const auto& layer : family) {
      total += layer.size;
    }
  }
  return total;
}

VertexSet SubLayerFamily::members() const {
  VertexSet set(params_.vertex_count());
  for (const auto& family : families_) {
    for (const auto& layer : family) {
      for (std::uint64_t id = layer.first_id; id < layer.first_id + layer.size; ++id) {
        set.insert(id);
      }
    }
  }
  return set;
}

FamilyCensus SubLayerFamily::predicted_census() const {
  const std::uint64_t L = params_.arity();
  const auto& terms = decomposition_.terms();
  FamilyCensus census;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto [a, b] = terms[i];
    const std::uint64_t block = params_.power(b);
    census.within_sublayers += a * ((L - 1) * b * block / 2);
    census.within_families += clique_edges(a) * block;
    for (std::size_t k = i + 1; k < terms.size(); ++k) {
      census.across_families +=
          clique_increment(a + 1) * terms[k].coefficient * params_.power(terms[k].exponent);
    }
  }
  return census;
}

FamilyCensus SubLayerFamily::counted_census(const Graph& graph) const {
  if (graph.vertex_count() != params_.vertex_count()) {
    throw DomainError("graph does not match the family's K_L^n");
  }
  constexpr std::uint32_t kOutside = ~std::uint32_t{0};
  std::vector<std::uint32_t> family_of(graph.vertex_count(), kOutside);
  std::vector<std::uint32_t> layer_of(graph.vertex_count(), kOutside);
  std::uint32_t layer_index = 0;
  for (std::uint32_t f = 0; f < families_.size(); ++f) {
    for (const auto& layer : families_[f]) {
      for (std::uint64_t id = layer.first_id; id < layer.first_id + layer.size; ++id) {
        family_of[id] = f;
        layer_of[id] = layer_index;
      }
      ++layer_index;
    }
  }
  FamilyCensus census;
  for (const auto& [u, v] : graph.edges()) {
    if (family_of[u] == kOutside || family_of[v] == kOutside) {
      continue;
    }
    if (layer_of[u] == layer_of[v]) {
      ++census.within_sublayers;
    } else if (family_of[u] == family_of[v]) {
      ++census.within_families;
    } else {
      ++census.across_families;
    }
  }
  return census;
}

VertexSet optimal_set(std::uint64_t m, const HammingParams& params, std::uint64_t vertex_cap) {
  if (m < 1 || m > params.half()) {
    throw DomainError("m=" + std::to_string(m) + " outside [1, " +
                      std::to_string(params.half()) + "]");
  }
  if (params.vertex_count() > vertex_cap) {
    throw OverflowError("K_L^n has more vertices than the cap of " + std::to_string(vertex_cap));
  }
  return VertexSet::prefix(params.vertex_count(), m);
}

SubLayerFamily sublayer_family(std::uint64_t m, const HammingParams& params) {
  if (m < 1 || m > params.half()) {
    throw DomainError("m=" + std::to_string(m) + " outside [1, " +
                      std::to_string(params.half()) + "]");
  }
  const std::uint64_t L = params.arity();
  const std::uint32_t n = params.dimension();
  auto decomposition = decompose(m, L);
  const auto& terms = decomposition.terms();

  // Digits indexed by coordinate position 1..n (position p is the digit of
  // weight L^{p-1}); earlier families pin their coordinate b_k+1 to a_k.
  std::vector<std::uint64_t> pinned(n + 1, 0);
  std::vector<std::vector<SubLayerDescriptor>> families;
  for (const auto& [a, b] : terms) {
    std::vector<SubLayerDescriptor> family;
    for (std::uint64_t j = 1; j <= a; ++j) {
      std::vector<std::uint64_t> digits = pinned;
      digits[b + 1] = j - 1;
      SubLayerDescriptor layer;
      layer.free_dimensions = b;
      layer.size = params.power(b);
      std::uint64_t leading = 0;
      for (std::uint32_t p = n; p > b; --p) {
        layer.prefix.push_back(digits[p]);
        leading = leading * L + digits[p];
      }
      layer.first_id = checked::narrow(checked::mul(leading, layer.size));
      family.push_back(std::move(layer));
    }
    pinned[b + 1] = a;
    families.push_back(std::move(family));
  }
  return SubLayerFamily(params, std::move(decomposition), std::move(families));
}

namespace {

std::vector<std::uint64_t> component_sizes(const Graph& graph, const VertexSet& side) {
  std::vector<char> seen(graph.vertex_count(), 0);
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> stack;
  for (const auto start : side.members()) {
    if (seen[start]) {
      continue;
    }
    std::uint64_t size = 0;
    seen[start] = 1;
    stack.push_back(static_cast<std::uint32_t>(start));
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      ++size;
      for (const auto w : graph.neighbors(v)) {
        if (!seen[w] && side.contains(w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (rank_[a] < rank_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    if (rank_[a] == rank_[b]) {
      ++rank_[a];
    }
    return true;
  }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

} // namespace

CutReport evaluate_cut(const Graph& graph, const VertexSet& set) {
  if (set.universe() != graph.vertex_count()) {
    throw DomainError("vertex set universe does not match the graph");
  }
  const std::uint64_t size = set.size();
  if (size == 0 || size == graph.vertex_count()) {
    throw DomainError("cut needs a nonempty proper subset");
  }
  CutReport report;
  report.set_size = size;
  std::uint64_t side_degree_inside = 0;
  std::uint64_t other_degree_inside = 0;
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    const bool in_set = set.contains(v);
    for (const auto w : graph.neighbors(v)) {
      const bool w_in_set = set.contains(w);
      if (in_set && w_in_set) {
        ++side_degree_inside;
      } else if (!in_set && !w_in_set) {
        ++other_degree_inside;
      } else if (in_set) {
        ++report.cut_size;
      }
    }
  }
  report.internal_edges = side_degree_inside / 2;
  report.complement_internal_edges = other_degree_inside / 2;
  report.side_component_sizes = component_sizes(graph, set);
  report.complement_component_sizes = component_sizes(graph, set.complement());
  report.side_connected = report.side_component_sizes.size() == 1;
  report.complement_connected = report.complement_component_sizes.size() == 1;
  return report;
}

namespace {

// Shared sweep; for_each_neighbor(v, f) calls f(w) once per neighbour w.
template <typename Neighbors>
std::vector<CutReport> prefix_sweep(std::uint64_t count, std::uint64_t edge_count,
                                    const Neighbors& for_each_neighbor) {
  if (count < 2) {
    return {};
  }
  std::vector<CutReport> profile(count - 1);

  UnionFind forward(count);
  std::uint64_t components = 0;
  std::uint64_t internal = 0;
  std::uint64_t cut = 0;
  for (std::uint64_t v = 0; v + 1 < count; ++v) {
    std::uint64_t below = 0;
    std::uint64_t degree = 0;
    ++components;
    for_each_neighbor(v, [&](std::uint64_t w) {
      ++degree;
      if (w < v) {
        ++below;
        if (forward.unite(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(w))) {
          --components;
        }
      }
    });
    internal += below;
    cut = cut + degree - 2 * below;
    auto& report = profile[v];
    report.set_size = v + 1;
    report.internal_edges = internal;
    report.cut_size = cut;
    report.complement_internal_edges = edge_count - internal - cut;
    report.side_connected = components == 1;
  }

  UnionFind backward(count);
  components = 0;
  for (std::uint64_t v = count - 1; v >= 1; --v) {
    ++components;
    for_each_neighbor(v, [&](std::uint64_t w) {
      if (w > v && backward.unite(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(w))) {
        --components;
      }
    });
    // The suffix {v..N-1} is the complement of the prefix of size v.
    profile[v - 1].complement_connected = components == 1;
  }
  return profile;
}

} // namespace

std::vector<CutReport> prefix_cut_profile(const Graph& graph) {
  return prefix_sweep(graph.vertex_count(), graph.edge_count(),
                      [&](std::uint64_t v, const auto& visit) {
                        for (const auto w : graph.neighbors(static_cast<std::uint32_t>(v))) {
                          visit(w);
                        }
                      });
}

std::vector<CutReport> prefix_cut_profile(const HammingParams& params, std::uint64_t vertex_cap) {
  const std::uint64_t count = params.vertex_count();
  if (count > vertex_cap) {
    throw OverflowError("K_" + std::to_string(params.arity()) + "^" +
                        std::to_string(params.dimension()) + " has " + std::to_string(count) +
                        " vertices, above the cap of " + std::to_string(vertex_cap));
  }
  if (count > std::numeric_limits<std::uint32_t>::max()) {
    throw OverflowError("vertex ids exceed 32 bits");
  }
  const std::uint64_t L = params.arity();
  const std::uint64_t edge_count = checked::narrow(checked::mul(count, params.degree()) / 2);
  return prefix_sweep(count, edge_count, [&](std::uint64_t v, const auto& visit) {
    std::uint64_t place = 1;
    for (std::uint32_t j = 0; j < params.dimension(); ++j, place *= L) {
      const std::uint64_t base = v - ((v / place) % L) * place;
      for (std::uint64_t e = 0; e < L; ++e) {
        const std::uint64_t w = base + e * place;
        if (w != v) {
          visit(w);
        }
      }
    }
  });
}

} // namespace isocut

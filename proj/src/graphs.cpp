#include "isocut/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "isocut/checked.hpp"
#include "isocut/error.hpp"

namespace isocut {

HammingParams::HammingParams(std::uint64_t arity, std::uint32_t dimension)
    : arity_(arity), dimension_(dimension) {
  if (arity < 2) {
    throw DomainError("arity L must be at least 2");
  }
  if (dimension < 1) {
    throw DomainError("dimension n must be at least 1");
  }
  try {
    vertex_count_ = checked::narrow(checked::pow(arity, dimension));
    degree_ = checked::narrow(checked::mul(arity - 1, dimension));
  } catch (const OverflowError&) {
    throw OverflowError("L^n does not fit in 64 bits for L=" + std::to_string(arity) +
                        " n=" + std::to_string(dimension));
  }
}

std::uint64_t HammingParams::first_interval_end() const {
  return power(dimension_ / 2);
}

std::uint64_t HammingParams::power(std::uint32_t exponent) const {
  if (exponent > dimension_) {
    throw DomainError("exponent exceeds dimension");
  }
  return static_cast<std::uint64_t>(checked::pow(arity_, exponent));
}

std::string to_string(MatchingPolicy policy) {
  switch (policy) {
  case MatchingPolicy::identity:
    return "identity";
  case MatchingPolicy::reversal:
    return "reversal";
  case MatchingPolicy::seeded_random:
    return "seeded_random";
  }
  return "identity";
}

MatchingPolicy parse_matching_policy(const std::string& text) {
  if (text == "identity") {
    return MatchingPolicy::identity;
  }
  if (text == "reversal") {
    return MatchingPolicy::reversal;
  }
  if (text == "seeded_random") {
    return MatchingPolicy::seeded_random;
  }
  throw DomainError("unknown matching policy '" + text + "'");
}

GraphLabel GraphLabel::hamming(const HammingParams& params) {
  GraphLabel label;
  label.kind = Kind::hamming;
  label.arity = params.arity();
  label.dimension = params.dimension();
  return label;
}

GraphLabel GraphLabel::bc(std::uint32_t n, MatchingPolicy policy, std::uint64_t seed) {
  GraphLabel label;
  label.kind = Kind::bc;
  label.arity = 2;
  label.dimension = n;
  label.policy = policy;
  label.seed = policy == MatchingPolicy::seeded_random ? seed : 0;
  return label;
}

std::string GraphLabel::to_string() const {
  switch (kind) {
  case Kind::hamming:
    return "hamming(" + std::to_string(arity) + "," + std::to_string(dimension) + ")";
  case Kind::bc:
    return "bc(" + std::to_string(dimension) + "," + isocut::to_string(policy) + "," +
           std::to_string(seed) + ")";
  case Kind::custom:
    break;
  }
  return "custom";
}

namespace {

std::vector<std::string> split_arguments(const std::string& text, std::size_t open) {
  const auto close = text.rfind(')');
  if (close == std::string::npos || close < open) {
    throw DomainError("malformed graph label '" + text + "'");
  }
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(open + 1, close - open - 1));
  std::string part;
  while (std::getline(ss, part, ',')) {
    parts.push_back(part);
  }
  return parts;
}

std::uint64_t parse_unsigned(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
    throw DomainError("expected an unsigned integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw OverflowError("integer out of range: '" + text + "'");
  }
}

} // namespace

GraphLabel GraphLabel::parse(const std::string& text) {
  if (text == "custom" || text.empty()) {
    return custom();
  }
  const auto open = text.find('(');
  if (open == std::string::npos) {
    throw DomainError("malformed graph label '" + text + "'");
  }
  const std::string head = text.substr(0, open);
  const auto args = split_arguments(text, open);
  if (head == "hamming" && args.size() == 2) {
    const auto n = parse_unsigned(args[1]);
    if (n > std::numeric_limits<std::uint32_t>::max()) {
      throw DomainError("dimension out of range in label");
    }
    return hamming(HammingParams(parse_unsigned(args[0]), static_cast<std::uint32_t>(n)));
  }
  if (head == "bc" && args.size() == 3) {
    return bc(static_cast<std::uint32_t>(parse_unsigned(args[0])),
              parse_matching_policy(args[1]), parse_unsigned(args[2]));
  }
  throw DomainError("malformed graph label '" + text + "'");
}

Graph::Graph(std::uint32_t vertex_count, std::vector<std::uint64_t> offsets,
             std::vector<std::uint32_t> neighbors, GraphLabel label)
    : vertex_count_(vertex_count), offsets_(std::move(offsets)),
      neighbors_(std::move(neighbors)), label_(label) {}

Graph::Graph(std::uint32_t vertex_count, std::vector<Edge> edges, GraphLabel label)
    : vertex_count_(vertex_count), label_(label) {
  for (auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw DomainError("edge endpoint out of range");
    }
    if (u == v) {
      throw DomainError("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) {
      std::swap(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw DomainError("duplicate edge in edge list");
  }
  std::vector<std::uint64_t> degree(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(vertex_count + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  neighbors_.resize(offsets_.back());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors_[cursor[u]++] = v;
    neighbors_[cursor[v]++] = u;
  }
  for (std::uint32_t v = 0; v < vertex_count; ++v) {
    std::sort(neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::uint32_t Graph::min_degree() const {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    best = std::min(best, degree(v));
  }
  return vertex_count_ == 0 ? 0 : best;
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u >= vertex_count_ || v >= vertex_count_) {
    return false;
  }
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::is_regular(std::uint32_t d) const {
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    if (degree(v) != d) {
      return false;
    }
  }
  return true;
}

bool Graph::is_connected() const {
  if (vertex_count_ == 0) {
    return true;
  }
  std::vector<char> seen(vertex_count_, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < vertex_count_; ++u) {
    for (const auto v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (vertex_count_ > 64) {
    throw DomainError("adjacency masks need at most 64 vertices");
  }
  std::vector<std::uint64_t> rows(vertex_count_, 0);
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    for (const auto w : neighbors(v)) {
      rows[v] |= std::uint64_t{1} << w;
    }
  }
  return rows;
}

Graph hamming_graph(const HammingParams& params, std::uint64_t vertex_cap) {
  const std::uint64_t count = params.vertex_count();
  if (count > vertex_cap || count > std::numeric_limits<std::uint32_t>::max()) {
    throw OverflowError("K_" + std::to_string(params.arity()) + "^" +
                        std::to_string(params.dimension()) + " has " + std::to_string(count) +
                        " vertices, above the cap of " + std::to_string(vertex_cap));
  }
  const std::uint64_t L = params.arity();
  const std::uint32_t n = params.dimension();
  const std::uint64_t degree = params.degree();

  std::vector<std::uint64_t> offsets(count + 1);
  for (std::uint64_t v = 0; v <= count; ++v) {
    offsets[v] = v * degree;
  }
  std::vector<std::uint32_t> neighbors(count * degree);
  for (std::uint64_t v = 0; v < count; ++v) {
    std::uint64_t cursor = offsets[v];
    std::uint64_t place = 1;
    std::uint64_t rest = v;
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint64_t digit = rest % L;
      rest /= L;
      const std::uint64_t base = v - digit * place;
      for (std::uint64_t c = 0; c < L; ++c) {
        if (c != digit) {
          neighbors[cursor++] = static_cast<std::uint32_t>(base + c * place);
        }
      }
      place *= L;
    }
    std::sort(neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              neighbors.begin() + static_cast<std::ptrdiff_t>(cursor));
  }
  return Graph(static_cast<std::uint32_t>(count), std::move(offsets), std::move(neighbors),
               GraphLabel::hamming(params));
}

namespace {

// Uniform draw in [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

} // namespace

Graph bc_network(std::uint32_t n, MatchingPolicy policy, std::uint64_t seed,
                 std::uint64_t vertex_cap) {
  if (n < 1) {
    throw DomainError("BC network dimension must be at least 1");
  }
  if (n >= 32 || (std::uint64_t{1} << n) > vertex_cap) {
    throw OverflowError("B_" + std::to_string(n) + " exceeds the vertex cap of " +
                        std::to_string(vertex_cap));
  }
  std::mt19937_64 rng(seed);
  std::vector<Graph::Edge> edges{{0, 1}};
  for (std::uint32_t k = 2; k <= n; ++k) {
    const std::uint32_t half = std::uint32_t{1} << (k - 1);
    std::vector<std::uint32_t> partner(half);
    std::iota(partner.begin(), partner.end(), 0u);
    if (policy == MatchingPolicy::reversal) {
      std::reverse(partner.begin(), partner.end());
    } else if (policy == MatchingPolicy::seeded_random) {
      for (std::uint32_t i = half - 1; i > 0; --i) {
        const auto j = static_cast<std::uint32_t>(uniform_below(rng, i + 1));
        std::swap(partner[i], partner[j]);
      }
    }
    const std::size_t previous = edges.size();
    for (std::size_t e = 0; e < previous; ++e) {
      edges.emplace_back(edges[e].first + half, edges[e].second + half);
    }
    for (std::uint32_t v = 0; v < half; ++v) {
      edges.emplace_back(v, partner[v] + half);
    }
  }
  return Graph(std::uint32_t{1} << n, std::move(edges), GraphLabel::bc(n, policy, seed));
}

VertexString::VertexString(std::uint64_t arity, std::vector<std::uint64_t> digits)
    : arity_(arity), digits_(std::move(digits)) {
  if (arity < 2) {
    throw DomainError("arity L must be at least 2");
  }
  for (const auto d : digits_) {
    if (d >= arity) {
      throw DomainError("digit " + std::to_string(d) + " out of range for L=" +
                        std::to_string(arity));
    }
  }
}

std::string VertexString::to_string() const {
  std::string out;
  if (arity_ <= 36) {
    for (const auto d : digits_) {
      out.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10));
    }
    return out;
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i != 0) {
      out.push_back('.');
    }
    out += std::to_string(digits_[i]);
  }
  return out;
}

VertexString VertexString::parse(const std::string& text, std::uint64_t arity) {
  std::vector<std::uint64_t> digits;
  if (arity <= 36) {
    for (const char c : text) {
      if (c >= '0' && c <= '9') {
        digits.push_back(static_cast<std::uint64_t>(c - '0'));
      } else if (c >= 'a' && c <= 'z') {
        digits.push_back(static_cast<std::uint64_t>(c - 'a' + 10));
      } else {
        throw DomainError("invalid digit '" + std::string(1, c) + "' in vertex string");
      }
    }
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.')) {
      digits.push_back(parse_unsigned(part));
    }
  }
  return VertexString(arity, std::move(digits));
}

VertexString encode(std::uint64_t id, const HammingParams& params) {
  if (id >= params.vertex_count()) {
    throw DomainError("vertex id " + std::to_string(id) + " out of range [0, " +
                      std::to_string(params.vertex_count()) + ")");
  }
  std::vector<std::uint64_t> digits(params.dimension());
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = id % params.arity();
    id /= params.arity();
  }
  return VertexString(params.arity(), std::move(digits));
}

std::uint64_t decode(const VertexString& s, const HammingParams& params) {
  if (s.arity() != params.arity()) {
    throw DomainError("vertex string arity does not match L");
  }
  if (s.length() != params.dimension()) {
    throw DomainError("vertex string has length " + std::to_string(s.length()) +
                      ", expected " + std::to_string(params.dimension()));
  }
  std::uint64_t id = 0;
  for (const auto d : s.digits()) {
    id = id * params.arity() + d;
  }
  return id;
}

std::strong_ordering lex_compare(const VertexString& a, const VertexString& b) {
  if (a.length() != b.length()) {
    throw DomainError("cannot compare vertex strings of different lengths");
  }
  const auto da = a.digits();
  const auto db = b.digits();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] != db[i]) {
      return da[i] <=> db[i];
    }
  }
  return std::strong_ordering::equal;
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << "# vertices=" << graph.vertex_count() << " edges=" << graph.edge_count()
      << " label=" << graph.label().to_string() << '\n';
  for (const auto& [u, v] : graph.edges()) {
    out << u << ' ' << v << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::uint64_t vertices = 0;
  std::uint64_t declared_edges = 0;
  bool have_header = false;
  GraphLabel label;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      if (have_header) {
        continue;
      }
      std::stringstream ss(line.substr(1));
      std::string field;
      while (ss >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) {
          continue;
        }
        const auto key = field.substr(0, eq);
        const auto value = field.substr(eq + 1);
        if (key == "vertices") {
          vertices = parse_unsigned(value);
        } else if (key == "edges") {
          declared_edges = parse_unsigned(value);
        } else if (key == "label") {
          label = GraphLabel::parse(value);
        }
      }
      have_header = true;
      continue;
    }
    std::stringstream ss(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!(ss >> u >> v)) {
      throw DomainError("malformed edge line '" + line + "'");
    }
    if (!have_header) {
      throw DomainError("edge list is missing the '# vertices=...' header");
    }
    if (u >= vertices || v >= vertices) {
      throw DomainError("edge endpoint out of range in line '" + line + "'");
    }
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  if (!have_header) {
    throw DomainError("edge list is missing the '# vertices=...' header");
  }
  if (vertices > std::numeric_limits<std::uint32_t>::max()) {
    throw OverflowError("vertex count too large");
  }
  if (edges.size() != declared_edges) {
    throw DomainError("header declares " + std::to_string(declared_edges) +
                      " edges but " + std::to_string(edges.size()) + " were read");
  }
  return Graph(static_cast<std::uint32_t>(vertices), std::move(edges), label);
}

} // namespace isocut

#include "isocut/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

#include "isocut/checked.hpp"
#include "isocut/error.hpp"
#include "isocut/kernels.hpp"

namespace isocut {

std::uint32_t default_parallelism() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

void OracleBudget::validate() const {
  if (max_subsets == 0 || max_vertices == 0 || parallel_chunks == 0) {
    throw DomainError("oracle budget fields must be positive");
  }
}

namespace {

// ---------------------------------------------------------------------------
// Vertex masks: a plain word up to 64 vertices, a word vector above that.

class WideMask {
public:
  WideMask() = default;
  explicit WideMask(std::size_t words) : w_(words, 0) {}

  std::vector<std::uint64_t> w_;

  friend bool operator==(const WideMask&, const WideMask&) = default;
};

inline std::uint64_t m_zero(std::uint32_t, std::uint64_t*) { return 0; }
inline WideMask m_zero(std::uint32_t n, WideMask*) { return WideMask((n + 63) / 64); }

inline void m_set(std::uint64_t& a, std::uint32_t i) { a |= std::uint64_t{1} << i; }
inline void m_reset(std::uint64_t& a, std::uint32_t i) { a &= ~(std::uint64_t{1} << i); }
inline bool m_test(std::uint64_t a, std::uint32_t i) { return (a >> i) & 1u; }
inline std::uint64_t m_and(std::uint64_t a, std::uint64_t b) { return a & b; }
inline std::uint64_t m_or(std::uint64_t a, std::uint64_t b) { return a | b; }
inline std::uint64_t m_andnot(std::uint64_t a, std::uint64_t b) { return a & ~b; }
inline bool m_empty(std::uint64_t a) { return a == 0; }
inline bool m_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }
inline std::uint32_t m_count(std::uint64_t a) { return static_cast<std::uint32_t>(std::popcount(a)); }
inline std::uint32_t m_count_and(std::uint64_t a, std::uint64_t b) { return m_count(a & b); }
inline std::uint32_t m_lowest(std::uint64_t a) { return static_cast<std::uint32_t>(std::countr_zero(a)); }
inline bool m_less(std::uint64_t a, std::uint64_t b) { return mask_lex_less(a, b); }
template <class F> void m_each(std::uint64_t a, F&& f) {
  while (a != 0) {
    f(static_cast<std::uint32_t>(std::countr_zero(a)));
    a &= a - 1;
  }
}
inline VertexSet m_to_set(std::uint32_t n, std::uint64_t a) { return VertexSet::from_mask(n, a); }

inline void m_set(WideMask& a, std::uint32_t i) { a.w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void m_reset(WideMask& a, std::uint32_t i) { a.w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool m_test(const WideMask& a, std::uint32_t i) { return (a.w_[i >> 6] >> (i & 63)) & 1u; }
inline WideMask m_and(const WideMask& a, const WideMask& b) {
  WideMask out(a.w_.size());
  for (std::size_t k = 0; k < a.w_.size(); ++k) out.w_[k] = a.w_[k] & b.w_[k];
  return out;
}
inline WideMask m_or(const WideMask& a, const WideMask& b) {
  WideMask out(a.w_.size());
  for (std::size_t k = 0; k < a.w_.size(); ++k) out.w_[k] = a.w_[k] | b.w_[k];
  return out;
}
inline WideMask m_andnot(const WideMask& a, const WideMask& b) {
  WideMask out(a.w_.size());
  for (std::size_t k = 0; k < a.w_.size(); ++k) out.w_[k] = a.w_[k] & ~b.w_[k];
  return out;
}
inline bool m_empty(const WideMask& a) {
  return std::all_of(a.w_.begin(), a.w_.end(), [](std::uint64_t w) { return w == 0; });
}
inline bool m_subset(const WideMask& a, const WideMask& b) {
  for (std::size_t k = 0; k < a.w_.size(); ++k) {
    if ((a.w_[k] & ~b.w_[k]) != 0) return false;
  }
  return true;
}
inline std::uint32_t m_count(const WideMask& a) {
  std::uint32_t c = 0;
  for (const auto w : a.w_) c += static_cast<std::uint32_t>(std::popcount(w));
  return c;
}
inline std::uint32_t m_count_and(const WideMask& a, const WideMask& b) {
  std::uint32_t c = 0;
  for (std::size_t k = 0; k < a.w_.size(); ++k) {
    c += static_cast<std::uint32_t>(std::popcount(a.w_[k] & b.w_[k]));
  }
  return c;
}
inline std::uint32_t m_lowest(const WideMask& a) {
  for (std::size_t k = 0; k < a.w_.size(); ++k) {
    if (a.w_[k] != 0) return static_cast<std::uint32_t>(64 * k + std::countr_zero(a.w_[k]));
  }
  return static_cast<std::uint32_t>(64 * a.w_.size());
}
template <class F> void m_each(const WideMask& a, F&& f) {
  for (std::size_t k = 0; k < a.w_.size(); ++k) {
    std::uint64_t bits = a.w_[k];
    while (bits != 0) {
      f(static_cast<std::uint32_t>(64 * k + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}
inline bool m_any_above(const WideMask& a, std::uint32_t pos) {
  const std::size_t word = pos >> 6;
  const std::uint32_t bit = pos & 63;
  if (bit < 63 && (a.w_[word] >> (bit + 1)) != 0) return true;
  for (std::size_t k = word + 1; k < a.w_.size(); ++k) {
    if (a.w_[k] != 0) return true;
  }
  return false;
}
inline bool m_less(const WideMask& a, const WideMask& b) {
  for (std::size_t k = 0; k < a.w_.size(); ++k) {
    const std::uint64_t diff = a.w_[k] ^ b.w_[k];
    if (diff == 0) continue;
    const std::uint32_t low = static_cast<std::uint32_t>(64 * k + std::countr_zero(diff));
    if (m_test(a, low)) return m_any_above(b, low);
    return !m_any_above(a, low);
  }
  return false;
}
inline VertexSet m_to_set(std::uint32_t n, const WideMask& a) {
  VertexSet set(n);
  m_each(a, [&](std::uint32_t v) { set.insert(v); });
  return set;
}

// ---------------------------------------------------------------------------

template <class Mask> struct Context {
  std::uint32_t n = 0;
  std::vector<Mask> adj;
  std::vector<Mask> above; // above[v] = {v+1, ..., n-1}
  std::vector<std::uint32_t> deg;
  Mask full{};
  std::uint64_t edges = 0;
  bool regular = false;
  std::uint32_t d = 0;

  explicit Context(const Graph& g) : n(g.vertex_count()), edges(g.edge_count()) {
    const Mask zero = m_zero(n, static_cast<Mask*>(nullptr));
    full = zero;
    adj.assign(n, zero);
    above.assign(n, zero);
    deg.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      m_set(full, v);
      for (const auto w : g.neighbors(v)) m_set(adj[v], w);
      deg[v] = g.degree(v);
      for (std::uint32_t w = v + 1; w < n; ++w) m_set(above[v], w);
    }
    d = n == 0 ? 0 : deg[0];
    regular = g.is_regular(d);
  }

  Mask zero() const { return m_zero(n, static_cast<Mask*>(nullptr)); }

  std::uint64_t degree_sum(const Mask& x) const {
    if (regular) return std::uint64_t{d} * m_count(x);
    std::uint64_t s = 0;
    m_each(x, [&](std::uint32_t v) { s += deg[v]; });
    return s;
  }

  std::uint64_t inner_sum(const Mask& x) const {
    std::uint64_t s = 0;
    m_each(x, [&](std::uint32_t v) { s += m_count_and(adj[v], x); });
    return s;
  }

  bool connected(const Mask& set) const {
    if (m_empty(set)) return false;
    Mask reached = zero();
    m_set(reached, m_lowest(set));
    Mask frontier = reached;
    while (!m_empty(frontier)) {
      Mask next = zero();
      m_each(frontier, [&](std::uint32_t v) { next = m_or(next, adj[v]); });
      frontier = m_andnot(m_and(next, set), reached);
      reached = m_or(reached, frontier);
    }
    return m_subset(set, reached);
  }
};

// ---------------------------------------------------------------------------
// Budget metering and the worker pool.

struct Cancelled {};

struct Shared {
  std::uint64_t cap = 0;
  std::atomic<std::uint64_t> visited{0};
  std::atomic<bool> stop{false};
};

class Meter {
public:
  explicit Meter(Shared& shared) : shared_(shared) {}

  void tick() {
    if (++local_ >= kFlush) flush();
  }
  void flush() {
    const std::uint64_t total = shared_.visited.fetch_add(local_) + local_;
    local_ = 0;
    if (total > shared_.cap) {
      throw BudgetExceeded("enumeration exceeded the budget of " + std::to_string(shared_.cap) +
                           " subsets");
    }
    if (shared_.stop.load(std::memory_order_relaxed)) throw Cancelled{};
  }

private:
  static constexpr std::uint64_t kFlush = 1 << 12;
  Shared& shared_;
  std::uint64_t local_ = 0;
};

template <class Fn> void run_chunks(std::size_t chunks, std::uint32_t threads, Shared& shared, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    Meter meter(shared);
    try {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= chunks || shared.stop.load(std::memory_order_relaxed)) break;
        fn(c, meter);
      }
      meter.flush();
    } catch (const Cancelled&) {
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      shared.stop = true;
    }
  };
  const std::size_t count = std::max<std::size_t>(1, std::min<std::size_t>(threads, chunks));
  std::vector<std::thread> pool;
  pool.reserve(count - 1);
  for (std::size_t i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------

template <class Mask> struct Best {
  bool found = false;
  std::uint64_t cut = 0;
  Mask witness{};
  std::uint64_t atom = 0;

  bool improves(std::uint64_t c, const Mask& x, std::uint64_t size) const {
    return !found || c < cut || (c == cut && (size < atom || m_less(x, witness)));
  }
  void offer(std::uint64_t c, const Mask& x, std::uint64_t size) {
    if (!found || c < cut) {
      found = true;
      cut = c;
      witness = x;
      atom = size;
      return;
    }
    if (c == cut) {
      if (m_less(x, witness)) witness = x;
      atom = std::min(atom, size);
    }
  }
  void merge(const Best& other) {
    if (other.found) offer(other.cut, other.witness, other.atom);
  }
};

template <class Mask>
FragmentResult finish(const Context<Mask>& ctx, const std::vector<Best<Mask>>& parts,
                      const Shared& shared, std::uint32_t threads, std::string kernel,
                      std::chrono::steady_clock::time_point start, const std::string& what) {
  Best<Mask> best;
  for (const auto& p : parts) best.merge(p);
  if (!best.found) throw InfeasibleResult("no vertex set satisfies " + what);
  FragmentResult result;
  result.optimum = best.cut;
  result.witness = m_to_set(ctx.n, best.witness);
  result.atom_size = best.atom;
  result.stats.subsets_visited = shared.visited.load();
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.stats.threads = threads;
  result.stats.kernel = std::move(kernel);
  return result;
}

// ---------------------------------------------------------------------------
// Connected-set enumeration: grow from the least vertex v, extending only by
// vertices above v that are not already adjacent to the current set, so each
// connected set appears once. A chunk is (v, first extension).

template <class Mask> struct GrowState {
  Mask sub;
  Mask closed; // sub and its neighbours
  std::uint32_t size;
  std::uint64_t inner;  // sum over sub of internal degree
  std::uint64_t degsum; // sum over sub of degree
};

template <class Mask, class Visit>
void grow(const Context<Mask>& ctx, const Mask& allowed, const GrowState<Mask>& s, Mask ext,
          std::uint32_t kmax, Meter& meter, Visit& visit) {
  meter.tick();
  visit(s);
  if (s.size >= kmax) return;
  while (!m_empty(ext)) {
    const std::uint32_t w = m_lowest(ext);
    m_reset(ext, w);
    GrowState<Mask> child{s.sub, m_or(s.closed, ctx.adj[w]), s.size + 1,
                          s.inner + 2 * std::uint64_t{m_count_and(ctx.adj[w], s.sub)},
                          s.degsum + ctx.deg[w]};
    m_set(child.sub, w);
    const Mask child_ext = m_or(ext, m_andnot(m_and(ctx.adj[w], allowed), s.closed));
    grow(ctx, allowed, child, child_ext, kmax, meter, visit);
  }
}

struct GrowChunk {
  std::uint32_t root;
  std::uint32_t branch;
};

template <class Mask>
std::vector<GrowChunk> grow_chunks(const Context<Mask>& ctx, const Mask& allowed,
                                   std::uint32_t only_root = ~0u) {
  std::vector<GrowChunk> chunks;
  for (std::uint32_t v = 0; v < ctx.n; ++v) {
    if (!m_test(allowed, v) || (only_root != ~0u && v != only_root)) continue;
    const std::uint32_t branches =
        std::max(1u, m_count(m_and(m_and(ctx.adj[v], allowed), ctx.above[v])));
    for (std::uint32_t b = 0; b < branches; ++b) chunks.push_back({v, b});
  }
  return chunks;
}

template <class Mask, class Visit>
void grow_chunk(const Context<Mask>& ctx, const Mask& allowed, GrowChunk chunk,
                std::uint32_t kmax, Meter& meter, Visit& visit) {
  const std::uint32_t v = chunk.root;
  const Mask allowed_above = m_and(allowed, ctx.above[v]);
  GrowState<Mask> root{ctx.zero(), ctx.adj[v], 1, 0, ctx.deg[v]};
  m_set(root.sub, v);
  m_set(root.closed, v);
  if (chunk.branch == 0) {
    meter.tick();
    visit(root);
  }
  if (kmax <= 1) return;
  Mask ext = m_and(ctx.adj[v], allowed_above);
  for (std::uint32_t i = 0; i < chunk.branch && !m_empty(ext); ++i) m_reset(ext, m_lowest(ext));
  if (m_empty(ext)) return;
  const std::uint32_t w = m_lowest(ext);
  m_reset(ext, w);
  GrowState<Mask> child{root.sub, m_or(root.closed, ctx.adj[w]), 2,
                        2 * std::uint64_t{m_count_and(ctx.adj[w], root.sub)},
                        root.degsum + ctx.deg[w]};
  m_set(child.sub, w);
  const Mask child_ext = m_or(ext, m_andnot(m_and(ctx.adj[w], allowed_above), root.closed));
  grow(ctx, allowed_above, child, child_ext, kmax, meter, visit);
}

// ---------------------------------------------------------------------------
// Fixed-size subset scans. A chunk fixes the least one or two members; the
// rest is a combination of the vertices above them.

struct ComboChunk {
  std::uint32_t size;
  std::uint32_t first;
  std::uint32_t second; // unused when size == 1
};

inline std::vector<ComboChunk> combo_chunks(std::uint32_t n, std::uint32_t size) {
  std::vector<ComboChunk> chunks;
  if (size == 1) {
    for (std::uint32_t v = 0; v < n; ++v) chunks.push_back({1, v, 0});
    return chunks;
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t u = v + 1; u < n; ++u) {
      if (n - u - 1 >= size - 2) chunks.push_back({size, v, u});
    }
  }
  return chunks;
}

template <class F>
void combinations(std::uint64_t base, std::uint32_t from, std::uint32_t n, std::uint32_t k, F&& f) {
  const std::uint32_t r = n - from;
  if (k > r) return;
  if (k == 0) {
    f(base);
    return;
  }
  // r <= 62 here since chunks fix at least one lower vertex.
  std::uint64_t c = (std::uint64_t{1} << k) - 1;
  const std::uint64_t last = c << (r - k);
  for (;;) {
    f(base | (c << from));
    if (c == last) break;
    const std::uint64_t t = c | (c - 1);
    c = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(c) + 1));
  }
}

template <class F>
void combinations(WideMask base, std::uint32_t from, std::uint32_t n, std::uint32_t k, F&& f) {
  if (k == 0) {
    f(base);
    return;
  }
  for (std::uint32_t i = from; i + k <= n; ++i) {
    WideMask next = base;
    m_set(next, i);
    combinations(next, i + 1, n, k - 1, f);
  }
}

// Feeds (mask, inner degree sum) pairs to a consumer, batching through the
// census kernel on the word path.
template <class Mask, class Consumer> class Census {
public:
  Census(const Context<Mask>& ctx, std::span<const std::uint64_t> adjacency, kernels::Isa isa,
         Consumer& consumer)
      : ctx_(ctx), adjacency_(adjacency), isa_(isa), consumer_(consumer) {
    if constexpr (std::is_same_v<Mask, std::uint64_t>) {
      masks_.reserve(kBatch);
      sums_.resize(kBatch);
    }
  }

  void push(const Mask& x) {
    if constexpr (std::is_same_v<Mask, std::uint64_t>) {
      masks_.push_back(x);
      if (masks_.size() == kBatch) flush();
    } else {
      consumer_(x, ctx_.inner_sum(x));
    }
  }

  void flush() {
    if constexpr (std::is_same_v<Mask, std::uint64_t>) {
      if (masks_.empty()) return;
      const std::span<std::uint32_t> out(sums_.data(), masks_.size());
      kernels::inner_degree_sums(isa_, adjacency_, masks_, out);
      for (std::size_t i = 0; i < masks_.size(); ++i) consumer_(masks_[i], out[i]);
      masks_.clear();
    }
  }

private:
  static constexpr std::size_t kBatch = 512;
  const Context<Mask>& ctx_;
  std::span<const std::uint64_t> adjacency_;
  kernels::Isa isa_;
  Consumer& consumer_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint32_t> sums_;
};

template <class Mask, class Consumer>
void scan_combo_chunk(const Context<Mask>& ctx, std::span<const std::uint64_t> adjacency,
                      kernels::Isa isa, ComboChunk chunk, Meter& meter, Consumer& consumer) {
  Census<Mask, Consumer> census(ctx, adjacency, isa, consumer);
  Mask base = ctx.zero();
  m_set(base, chunk.first);
  std::uint32_t from = chunk.first + 1;
  std::uint32_t rest = chunk.size - 1;
  if (chunk.size >= 2) {
    m_set(base, chunk.second);
    from = chunk.second + 1;
    rest = chunk.size - 2;
  }
  combinations(base, from, ctx.n, rest, [&](const Mask& x) {
    meter.tick();
    census.push(x);
  });
  census.flush();
}

// ---------------------------------------------------------------------------

struct Setup {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  Shared shared;
  std::uint32_t threads;
};

void check_graph(const Graph& graph, const OracleBudget& budget) {
  budget.validate();
  if (graph.vertex_count() > budget.max_vertices) {
    throw BudgetExceeded("graph has " + std::to_string(graph.vertex_count()) +
                         " vertices, above the oracle cap of " +
                         std::to_string(budget.max_vertices));
  }
  if (graph.vertex_count() < 2) {
    throw DomainError("oracle needs at least two vertices");
  }
}

void check_m(const Graph& graph, std::uint64_t m) {
  const std::uint64_t half = graph.vertex_count() / 2;
  if (m < 1 || m > half) {
    throw DomainError("m=" + std::to_string(m) + " outside [1, " + std::to_string(half) + "]");
  }
}

checked::wide binomial(std::uint64_t n, std::uint64_t k) {
  checked::wide r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

template <class Mask>
FragmentResult beta_impl(const Graph& graph, std::uint64_t m, const OracleBudget& budget) {
  const Context<Mask> ctx(graph);
  Setup setup;
  setup.shared.cap = budget.max_subsets;
  if (binomial(ctx.n, m) > budget.max_subsets) {
    throw BudgetExceeded("C(" + std::to_string(ctx.n) + "," + std::to_string(m) +
                         ") subsets exceed the budget of " + std::to_string(budget.max_subsets));
  }
  std::vector<std::uint64_t> adjacency;
  if constexpr (std::is_same_v<Mask, std::uint64_t>) adjacency = ctx.adj;
  const kernels::Isa isa = kernels::active_isa();
  const auto chunks = combo_chunks(ctx.n, static_cast<std::uint32_t>(m));
  std::vector<Best<Mask>> parts(chunks.size());
  run_chunks(chunks.size(), budget.parallel_chunks, setup.shared, [&](std::size_t c, Meter& meter) {
    Best<Mask>& best = parts[c];
    auto consume = [&](const Mask& x, std::uint64_t inner) {
      const std::uint64_t cut = ctx.degree_sum(x) - inner;
      if (best.improves(cut, x, m)) best.offer(cut, x, m);
    };
    scan_combo_chunk(ctx, adjacency, isa, chunks[c], meter, consume);
  });
  std::string kernel;
  if constexpr (std::is_same_v<Mask, std::uint64_t>) kernel = std::string(kernels::isa_name(isa));
  return finish(ctx, parts, setup.shared, budget.parallel_chunks, kernel, setup.start,
                "the size constraint");
}

template <class Mask>
FragmentResult xi_impl(const Graph& graph, std::uint64_t m, bool both_sides,
                       const OracleBudget& budget) {
  const Context<Mask> ctx(graph);
  Setup setup;
  setup.shared.cap = budget.max_subsets;
  const auto chunks = grow_chunks(ctx, ctx.full);
  std::vector<Best<Mask>> parts(chunks.size());
  const auto size = static_cast<std::uint32_t>(m);
  run_chunks(chunks.size(), budget.parallel_chunks, setup.shared, [&](std::size_t c, Meter& meter) {
    Best<Mask>& best = parts[c];
    auto visit = [&](const GrowState<Mask>& s) {
      if (s.size != size) return;
      const std::uint64_t cut = s.degsum - s.inner;
      if (!best.improves(cut, s.sub, m)) return;
      if (both_sides && !ctx.connected(m_andnot(ctx.full, s.sub))) return;
      best.offer(cut, s.sub, m);
    };
    grow_chunk(ctx, ctx.full, chunks[c], size, meter, visit);
  });
  return finish(ctx, parts, setup.shared, budget.parallel_chunks, "", setup.start,
                both_sides ? "two-sided connectivity" : "connectivity");
}

// ---------------------------------------------------------------------------
// Side predicates for conditional cuts.

template <class Mask> struct SidePredicate {
  ConditionKind::Kind kind;
  std::uint64_t parameter;
  std::vector<Mask> layers; // embedded(t): every t-dimensional sub-layer
  std::uint64_t min_size;   // no qualifying side is smaller

  bool operator()(const Context<Mask>& ctx, const Mask& side, std::uint64_t size,
                  std::uint64_t inner) const {
    if (size < min_size) return false;
    switch (kind) {
    case ConditionKind::Kind::extra:
    case ConditionKind::Kind::isoperimetric:
      return size >= parameter;
    case ConditionKind::Kind::cyclic:
      return inner / 2 >= size;
    case ConditionKind::Kind::average:
      return inner >= parameter * size;
    case ConditionKind::Kind::super: {
      bool ok = true;
      m_each(side, [&](std::uint32_t v) { ok = ok && m_count_and(ctx.adj[v], side) >= parameter; });
      return ok;
    }
    case ConditionKind::Kind::embedded:
      return std::any_of(layers.begin(), layers.end(),
                         [&](const Mask& layer) { return m_subset(layer, side); });
    }
    return false;
  }
};

template <class Mask>
SidePredicate<Mask> make_predicate(const Graph& graph, const Context<Mask>& ctx,
                                   const ConditionKind& cond) {
  SidePredicate<Mask> pred{cond.kind(), cond.parameter(), {}, 1};
  switch (cond.kind()) {
  case ConditionKind::Kind::extra:
  case ConditionKind::Kind::isoperimetric:
    pred.min_size = std::max<std::uint64_t>(1, cond.parameter());
    break;
  case ConditionKind::Kind::cyclic:
    pred.min_size = 3;
    break;
  case ConditionKind::Kind::super:
  case ConditionKind::Kind::average:
    pred.min_size = cond.parameter() + 1;
    break;
  case ConditionKind::Kind::embedded: {
    const GraphLabel& label = graph.label();
    if (label.kind != GraphLabel::Kind::hamming) {
      throw UnsupportedError("embedded(t) needs a graph labelled hamming(L,n), got " +
                             label.to_string());
    }
    const HammingParams params(label.arity, label.dimension);
    if (params.vertex_count() != ctx.n) {
      throw DomainError("graph label does not match its vertex count");
    }
    const std::uint64_t t = cond.parameter();
    if (t > params.dimension()) {
      throw DomainError("t=" + std::to_string(t) + " exceeds n=" +
                        std::to_string(params.dimension()));
    }
    const std::uint32_t n = params.dimension();
    const std::uint64_t L = params.arity();
    for (std::uint32_t free = 0; free < (1u << n); ++free) {
      if (static_cast<std::uint64_t>(std::popcount(free)) != t) continue;
      std::map<std::uint64_t, Mask> groups;
      for (std::uint32_t id = 0; id < ctx.n; ++id) {
        std::uint64_t key = 0;
        std::uint64_t rest = id;
        std::uint64_t weight = 1;
        for (std::uint32_t pos = 0; pos < n; ++pos) {
          const std::uint64_t digit = rest % L;
          rest /= L;
          if (!((free >> pos) & 1u)) key += digit * weight;
          weight *= L;
        }
        auto [it, inserted] = groups.try_emplace(key, ctx.zero());
        m_set(it->second, id);
      }
      for (auto& [key, layer] : groups) pred.layers.push_back(std::move(layer));
    }
    pred.min_size = params.power(static_cast<std::uint32_t>(t));
    break;
  }
  }
  return pred;
}

template <class Mask>
FragmentResult isoperimetric_impl(const Graph& graph, const ConditionKind& cond,
                                  const OracleBudget& budget) {
  const Context<Mask> ctx(graph);
  Setup setup;
  setup.shared.cap = budget.max_subsets;
  const std::uint64_t h = std::max<std::uint64_t>(1, cond.parameter());
  const std::uint64_t half = ctx.n / 2;
  checked::wide total = 0;
  std::vector<ComboChunk> chunks;
  for (std::uint64_t s = h; s <= half; ++s) {
    total += binomial(ctx.n, s);
    const auto more = combo_chunks(ctx.n, static_cast<std::uint32_t>(s));
    chunks.insert(chunks.end(), more.begin(), more.end());
  }
  if (total > budget.max_subsets) {
    throw BudgetExceeded("isoperimetric scan needs " + checked::to_string(total) +
                         " subsets, above the budget of " + std::to_string(budget.max_subsets));
  }
  std::vector<std::uint64_t> adjacency;
  if constexpr (std::is_same_v<Mask, std::uint64_t>) adjacency = ctx.adj;
  const kernels::Isa isa = kernels::active_isa();
  std::vector<Best<Mask>> parts(chunks.size());
  run_chunks(chunks.size(), budget.parallel_chunks, setup.shared, [&](std::size_t c, Meter& meter) {
    Best<Mask>& best = parts[c];
    const std::uint64_t size = chunks[c].size;
    auto consume = [&](const Mask& x, std::uint64_t inner) {
      const std::uint64_t cut = ctx.degree_sum(x) - inner;
      if (best.improves(cut, x, size)) best.offer(cut, x, size);
    };
    scan_combo_chunk(ctx, adjacency, isa, chunks[c], meter, consume);
  });
  std::string kernel;
  if constexpr (std::is_same_v<Mask, std::uint64_t>) kernel = std::string(kernels::isa_name(isa));
  return finish(ctx, parts, setup.shared, budget.parallel_chunks, kernel, setup.start,
                cond.to_string());
}

template <class Mask>
FragmentResult conditional_impl(const Graph& graph, const ConditionKind& cond,
                                const OracleBudget& budget) {
  if (cond.kind() == ConditionKind::Kind::isoperimetric) {
    return isoperimetric_impl<Mask>(graph, cond, budget);
  }
  const Context<Mask> ctx(graph);
  const SidePredicate<Mask> pred = make_predicate(graph, ctx, cond);
  Setup setup;
  setup.shared.cap = budget.max_subsets;
  const auto chunks = grow_chunks(ctx, ctx.full);
  std::vector<Best<Mask>> parts(chunks.size());
  const std::uint32_t kmax = ctx.n / 2;
  run_chunks(chunks.size(), budget.parallel_chunks, setup.shared, [&](std::size_t c, Meter& meter) {
    Best<Mask>& best = parts[c];
    auto visit = [&](const GrowState<Mask>& s) {
      if (s.size < pred.min_size) return;
      const std::uint64_t cut = s.degsum - s.inner;
      if (!best.improves(cut, s.sub, s.size)) return;
      if (!pred(ctx, s.sub, s.size, s.inner)) return;
      const Mask other = m_andnot(ctx.full, s.sub);
      if (!ctx.connected(other)) return;
      const std::uint64_t other_inner = 2 * (ctx.edges - s.inner / 2 - cut);
      if (!pred(ctx, other, ctx.n - s.size, other_inner)) return;
      best.offer(cut, s.sub, s.size);
    };
    grow_chunk(ctx, ctx.full, chunks[c], kmax, meter, visit);
  });
  return finish(ctx, parts, setup.shared, budget.parallel_chunks, "", setup.start,
                cond.to_string());
}

// ---------------------------------------------------------------------------
// Search for a partition into >= 3 qualifying connected parts at most as
// expensive as the best two-part cut.

struct FoundMultipart {};

template <class Mask> class MultipartSearch {
public:
  MultipartSearch(const Context<Mask>& ctx, const SidePredicate<Mask>& pred, std::uint64_t opt,
                  std::atomic<bool>& found)
      : ctx_(ctx), pred_(pred), opt_(opt), found_(found) {}

  // Parts are peeled off in order of their least vertex; `remaining` still
  // has to be split into qualifying parts.
  void consider(const GrowState<Mask>& part, const Mask& remaining, std::uint64_t cost,
                std::uint32_t parts_before, Meter& meter) {
    if (found_.load(std::memory_order_relaxed)) throw FoundMultipart{};
    const std::uint64_t left = m_count(remaining) - part.size;
    if (left != 0 && left < pred_.min_size) return;
    if (parts_before == 0 && left == 0) return;
    if (!pred_(ctx_, part.sub, part.size, part.inner)) return;
    const Mask rest = m_andnot(remaining, part.sub);
    std::uint64_t boundary = 0;
    m_each(part.sub, [&](std::uint32_t v) { boundary += m_count_and(ctx_.adj[v], rest); });
    const std::uint64_t total = cost + boundary;
    if (total > opt_) return;
    if (left == 0) {
      if (parts_before + 1 >= 3) {
        found_ = true;
        throw FoundMultipart{};
      }
      return;
    }
    split(rest, total, parts_before + 1, meter);
  }

  void split(const Mask& remaining, std::uint64_t cost, std::uint32_t parts_before, Meter& meter) {
    const std::uint32_t r = m_lowest(remaining);
    const auto chunks = grow_chunks(ctx_, remaining, r);
    auto visit = [&](const GrowState<Mask>& s) { consider(s, remaining, cost, parts_before, meter); };
    for (const auto& chunk : chunks) {
      grow_chunk(ctx_, remaining, chunk, m_count(remaining), meter, visit);
    }
  }

private:
  const Context<Mask>& ctx_;
  const SidePredicate<Mask>& pred_;
  std::uint64_t opt_;
  std::atomic<bool>& found_;
};

template <class Mask>
bool bipartite_impl(const Graph& graph, const ConditionKind& cond, const OracleBudget& budget) {
  if (cond.kind() == ConditionKind::Kind::isoperimetric) return true;
  const std::uint64_t opt = conditional_impl<Mask>(graph, cond, budget).optimum;
  const Context<Mask> ctx(graph);
  const SidePredicate<Mask> pred = make_predicate(graph, ctx, cond);
  Shared shared;
  shared.cap = budget.max_subsets;
  std::atomic<bool> found{false};
  MultipartSearch<Mask> search(ctx, pred, opt, found);
  const auto chunks = grow_chunks(ctx, ctx.full, 0);
  run_chunks(chunks.size(), budget.parallel_chunks, shared, [&](std::size_t c, Meter& meter) {
    auto visit = [&](const GrowState<Mask>& s) { search.consider(s, ctx.full, 0, 0, meter); };
    try {
      grow_chunk(ctx, ctx.full, chunks[c], ctx.n, meter, visit);
    } catch (const FoundMultipart&) {
    }
  });
  return !found.load();
}

template <class F> auto dispatch(const Graph& graph, F&& f) {
  if (graph.vertex_count() <= 64) return f(std::uint64_t{});
  return f(WideMask{});
}

} // namespace

FragmentResult brute_beta(const Graph& graph, std::uint64_t m, const OracleBudget& budget) {
  check_graph(graph, budget);
  check_m(graph, m);
  return dispatch(graph, [&](auto tag) { return beta_impl<decltype(tag)>(graph, m, budget); });
}

FragmentResult brute_xi_e(const Graph& graph, std::uint64_t m, const OracleBudget& budget) {
  check_graph(graph, budget);
  check_m(graph, m);
  return dispatch(graph, [&](auto tag) { return xi_impl<decltype(tag)>(graph, m, false, budget); });
}

FragmentResult brute_xi(const Graph& graph, std::uint64_t m, const OracleBudget& budget) {
  check_graph(graph, budget);
  check_m(graph, m);
  return dispatch(graph, [&](auto tag) { return xi_impl<decltype(tag)>(graph, m, true, budget); });
}

FragmentResult brute_lambda_h(const Graph& graph, std::uint64_t h, const OracleBudget& budget) {
  check_graph(graph, budget);
  check_m(graph, h);
  const auto start = std::chrono::steady_clock::now();
  std::optional<FragmentResult> best;
  std::uint64_t visited = 0;
  for (std::uint64_t m = h; m <= graph.vertex_count() / 2; ++m) {
    OracleBudget rest = budget;
    rest.max_subsets = budget.max_subsets - visited;
    try {
      FragmentResult r = brute_xi(graph, m, rest);
      visited += r.stats.subsets_visited;
      if (!best || r.optimum < best->optimum) best = std::move(r);
    } catch (const InfeasibleResult&) {
    }
    if (visited >= budget.max_subsets) {
      throw BudgetExceeded("lambda_h scan exceeded the budget of " +
                           std::to_string(budget.max_subsets) + " subsets");
    }
  }
  if (!best) throw InfeasibleResult("no m >= h admits a two-sided connected cut");
  best->stats.subsets_visited = visited;
  best->stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return *best;
}

FragmentResult brute_conditional(const Graph& graph, const ConditionKind& cond,
                                 const OracleBudget& budget) {
  check_graph(graph, budget);
  return dispatch(graph,
                  [&](auto tag) { return conditional_impl<decltype(tag)>(graph, cond, budget); });
}

bool bipartite_property_check(const Graph& graph, const ConditionKind& cond,
                              const OracleBudget& budget) {
  check_graph(graph, budget);
  return dispatch(graph,
                  [&](auto tag) { return bipartite_impl<decltype(tag)>(graph, cond, budget); });
}

} // namespace isocut

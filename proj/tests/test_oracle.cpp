#include <doctest.h>

#include <algorithm>
#include <functional>

#include "isocut/closedform.hpp"
#include "isocut/construct.hpp"
#include "isocut/error.hpp"
#include "isocut/oracle.hpp"

using namespace isocut;

namespace {

OracleBudget threads(std::uint32_t count) {
  OracleBudget b;
  b.parallel_chunks = count;
  return b;
}

Graph cycle(std::uint32_t n) {
  std::vector<Graph::Edge> edges;
  for (std::uint32_t v = 0; v < n; ++v) {
    edges.emplace_back(v, (v + 1) % n);
  }
  return Graph(n, std::move(edges), GraphLabel::custom());
}

Graph path(std::uint32_t n) {
  std::vector<Graph::Edge> edges;
  for (std::uint32_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
  }
  return Graph(n, std::move(edges), GraphLabel::custom());
}

// Every subset checked directly; returns (optimum, lex-least witness).
std::pair<std::uint64_t, std::vector<std::uint64_t>>
naive_xi(const Graph& g, std::uint64_t m) {
  const std::uint32_t N = g.vertex_count();
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::uint64_t> witness;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) != m) {
      continue;
    }
    const auto report = evaluate_cut(g, VertexSet::from_mask(N, mask));
    if (!report.side_connected || !report.complement_connected) {
      continue;
    }
    const auto members = VertexSet::from_mask(N, mask).members();
    if (report.cut_size < best || (report.cut_size == best && members < witness)) {
      best = report.cut_size;
      witness = members;
    }
  }
  return {best, witness};
}

} // namespace

TEST_CASE("beta examples") {
  CHECK(brute_beta(hamming_graph(HammingParams(2, 4)), 5).optimum == 10);
  CHECK(brute_beta(hamming_graph(HammingParams(2, 3)), 4).optimum == 4);
  for (const auto& g : {path(6), cycle(7), bc_network(4, MatchingPolicy::reversal)}) {
    CHECK(brute_beta(g, 1).optimum == g.min_degree());
  }
}

TEST_CASE("xi examples") {
  const Graph k32 = hamming_graph(HammingParams(3, 2));
  const auto r = brute_xi(k32, 4);
  CHECK(r.optimum == xi(4, HammingParams(3, 2)));
  CHECK(r.optimum == 8);

  const HammingParams q4p(2, 4);
  const Graph q4 = hamming_graph(q4p);
  const auto w = brute_xi(q4, 5);
  CHECK(w.optimum == 10);
  CHECK(w.witness == optimal_set(5, q4p));
  const auto report = evaluate_cut(q4, w.witness);
  CHECK(report.cut_size == 10);
  CHECK(report.side_connected);
  CHECK(report.complement_connected);

  CHECK(brute_xi(cycle(4), 2).optimum == 2);
  CHECK(brute_xi_e(cycle(4), 2).optimum == 2);
}

TEST_CASE("three measures meet the closed form on small Hamming graphs") {
  for (const auto& p : {HammingParams(2, 2), HammingParams(2, 3), HammingParams(2, 4),
                        HammingParams(3, 2), HammingParams(4, 2)}) {
    const Graph g = hamming_graph(p);
    for (std::uint64_t m = 1; m <= p.half(); ++m) {
      const std::uint64_t expected = xi(m, p);
      CHECK(brute_beta(g, m).optimum == expected);
      CHECK(brute_xi_e(g, m).optimum == expected);
      CHECK(brute_xi(g, m).optimum == expected);
    }
  }
}

TEST_CASE("xi depends on connectivity on a path") {
  const Graph p6 = path(6);
  CHECK(brute_beta(p6, 2).optimum == 1);
  CHECK(brute_xi_e(p6, 2).optimum == 1);
  CHECK(brute_xi(p6, 3).optimum == 1);
  const Graph c6 = cycle(6);
  CHECK(brute_beta(c6, 3).optimum == 2);
  const auto wide = brute_beta(path(7), 3);
  CHECK(wide.optimum == 1);
  CHECK(wide.witness.members() == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("witness is the lexicographically least optimum") {
  std::vector<Graph> graphs{hamming_graph(HammingParams(2, 3)), cycle(8), path(9),
                            bc_network(3, MatchingPolicy::seeded_random, 4),
                            hamming_graph(HammingParams(3, 2))};
  for (const auto& g : graphs) {
    for (std::uint64_t m = 1; m <= g.vertex_count() / 2; ++m) {
      const auto [optimum, witness] = naive_xi(g, m);
      const auto r = brute_xi(g, m);
      CHECK(r.optimum == optimum);
      CHECK(r.witness.members() == witness);
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  const Graph b4 = bc_network(4, MatchingPolicy::seeded_random, 42);
  const Graph k42 = hamming_graph(HammingParams(4, 2));
  for (const Graph* g : {&b4, &k42}) {
    for (std::uint64_t m = 1; m <= g->vertex_count() / 2; ++m) {
      for (auto fn : {&brute_beta, &brute_xi_e, &brute_xi}) {
        const auto one = fn(*g, m, threads(1));
        for (std::uint32_t t : {2u, 3u, 8u}) {
          const auto many = fn(*g, m, threads(t));
          CHECK(many.optimum == one.optimum);
          CHECK(many.witness == one.witness);
          CHECK(many.atom_size == one.atom_size);
          CHECK(many.stats.subsets_visited == one.stats.subsets_visited);
        }
      }
    }
  }
  const Graph q4 = hamming_graph(HammingParams(2, 4));
  for (const auto& cond : {ConditionKind::cyclic(), ConditionKind::extra(3),
                           ConditionKind::isoperimetric(3), ConditionKind::super(2)}) {
    const auto one = brute_conditional(q4, cond, threads(1));
    const auto many = brute_conditional(q4, cond, threads(5));
    CHECK(one.optimum == many.optimum);
    CHECK(one.witness == many.witness);
    CHECK(one.atom_size == many.atom_size);
  }
}

TEST_CASE("lambda_h examples") {
  const Graph q4 = hamming_graph(HammingParams(2, 4));
  CHECK(brute_lambda_h(q4, 4).optimum == 8);
  CHECK(brute_lambda_h(q4, 1).optimum == 4);
  CHECK(brute_lambda_h(q4, 5).optimum == 8);
  CHECK(brute_lambda_h(q4, 3).optimum == lambda_extra_scan(3, HammingParams(2, 4), 100));
  CHECK(brute_lambda_h(bc_network(4, MatchingPolicy::seeded_random, 42), 4).optimum == 8);
  CHECK_THROWS_AS(brute_lambda_h(q4, 9), DomainError);
}

TEST_CASE("conditional examples") {
  CHECK(brute_conditional(hamming_graph(HammingParams(2, 4)), ConditionKind::cyclic()).optimum ==
        8);
  CHECK(brute_conditional(hamming_graph(HammingParams(3, 2)), ConditionKind::cyclic()).optimum ==
        6);
  CHECK(brute_conditional(hamming_graph(HammingParams(2, 3)), ConditionKind::super(1)).optimum ==
        4);
}

TEST_CASE("conditional matches the closed form with atoms of size theta") {
  for (const auto& p : {HammingParams(2, 3), HammingParams(2, 4), HammingParams(3, 2)}) {
    const Graph g = hamming_graph(p);
    std::vector<ConditionKind> kinds{ConditionKind::cyclic()};
    for (std::uint32_t t = 0; t < p.dimension(); ++t) {
      kinds.push_back(ConditionKind::embedded(t));
      kinds.push_back(ConditionKind::super((p.arity() - 1) * t));
      kinds.push_back(ConditionKind::average((p.arity() - 1) * t));
    }
    for (std::uint64_t h = 1; h <= p.first_interval_end(); ++h) {
      kinds.push_back(ConditionKind::extra(h));
      kinds.push_back(ConditionKind::isoperimetric(h));
    }
    for (const auto& cond : kinds) {
      CAPTURE(cond.to_string());
      CAPTURE(p.arity());
      CAPTURE(p.dimension());
      const auto r = brute_conditional(g, cond);
      CHECK(r.optimum == conditional_connectivity(cond, p));
      if (cond.structure(p) || as_g_power(cond.parameter(), p.arity())) {
        CHECK(r.atom_size == cond.theta(p));
      }
    }
  }
}

TEST_CASE("embedded sub-layers need not be prefix blocks") {
  // in Q3 the 1-dimensional sub-layers are all 12 edges, not only the 4 prefix pairs
  const Graph q3 = hamming_graph(HammingParams(2, 3));
  const auto r = brute_conditional(q3, ConditionKind::embedded(1));
  CHECK(r.optimum == 4);
  CHECK_THROWS_AS(brute_conditional(cycle(6), ConditionKind::embedded(1)), UnsupportedError);
}

TEST_CASE("bipartite property examples") {
  const Graph q3 = hamming_graph(HammingParams(2, 3));
  CHECK(bipartite_property_check(q3, ConditionKind::extra(2)));
  CHECK(bipartite_property_check(q3, ConditionKind::extra(1)));
  CHECK(bipartite_property_check(hamming_graph(HammingParams(3, 2)), ConditionKind::cyclic()));
  CHECK(bipartite_property_check(q3, ConditionKind::isoperimetric(2)));
}

TEST_CASE("bipartite property on a chain of triangles") {
  // three triangles joined by single edges
  std::vector<Graph::Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                 {6, 7}, {7, 8}, {6, 8}, {2, 3}, {5, 6}};
  const Graph chain(9, edges, GraphLabel::custom());
  // one bridge is optimal; a three-part split costs two
  CHECK(brute_conditional(chain, ConditionKind::extra(3)).optimum == 1);
  CHECK(bipartite_property_check(chain, ConditionKind::extra(3)));
}

TEST_CASE("budget and domain errors") {
  const Graph q4 = hamming_graph(HammingParams(2, 4));
  OracleBudget tiny;
  tiny.max_subsets = 10;
  CHECK_THROWS_AS(brute_beta(q4, 5, tiny), BudgetExceeded);
  CHECK_THROWS_AS(brute_xi(q4, 5, tiny), BudgetExceeded);
  OracleBudget narrow;
  narrow.max_vertices = 8;
  CHECK_THROWS_AS(brute_xi(q4, 2, narrow), BudgetExceeded);
  CHECK_THROWS_AS(brute_xi(q4, 0), DomainError);
  CHECK_THROWS_AS(brute_xi(q4, 9), DomainError);
  OracleBudget broken;
  broken.parallel_chunks = 0;
  CHECK_THROWS_AS(broken.validate(), DomainError);
  CHECK_THROWS_AS(brute_beta(q4, 2, broken), DomainError);
}

TEST_CASE("infeasible conditions") {
  CHECK_THROWS_AS(brute_conditional(path(8), ConditionKind::cyclic()), InfeasibleResult);
  CHECK_THROWS_AS(brute_conditional(hamming_graph(HammingParams(2, 2)), ConditionKind::cyclic()),
                  InfeasibleResult);
  CHECK_THROWS_AS(brute_conditional(cycle(6), ConditionKind::super(2)), InfeasibleResult);
}

TEST_CASE("graphs above 64 vertices use wide masks") {
  OracleBudget roomy;
  roomy.max_vertices = 128;
  const HammingParams p(3, 4);
  const Graph g = hamming_graph(p);
  CHECK(brute_xi(g, 1, roomy).optimum == xi(1, p));
  CHECK(brute_xi(g, 2, roomy).optimum == xi(2, p));
  CHECK(brute_xi_e(g, 3, roomy).optimum == xi(3, p));
  CHECK(brute_beta(g, 2, roomy).optimum == xi(2, p));
  CHECK(brute_xi(g, 2, roomy).witness == optimal_set(2, p));
  const Graph long_path = path(70);
  CHECK(brute_xi(long_path, 3, roomy).optimum == 1);
  CHECK(brute_xi(long_path, 3, roomy).witness.members() == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(brute_beta(long_path, 2, roomy).optimum == 1);
}

TEST_CASE("stats are filled") {
  const auto r = brute_xi(hamming_graph(HammingParams(2, 4)), 4, threads(2));
  CHECK(r.stats.subsets_visited > 0);
  CHECK(r.stats.threads >= 1);
  CHECK(r.stats.wall_seconds >= 0.0);
  const auto b = brute_beta(hamming_graph(HammingParams(2, 4)), 4);
  CHECK_FALSE(b.stats.kernel.empty());
}

#include "isocut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "isocut/checked.hpp"
#include "isocut/closedform.hpp"
#include "isocut/construct.hpp"
#include "isocut/error.hpp"

namespace isocut::verify {

std::string to_string(Scope scope) {
  switch (scope) {
  case Scope::tables:
    return "tables";
  case Scope::lemmas:
    return "lemmas";
  case Scope::oracle:
    return "oracle";
  case Scope::bc:
    return "bc";
  }
  return "tables";
}

Scope parse_scope(const std::string& text) {
  for (const auto s : {Scope::tables, Scope::lemmas, Scope::oracle, Scope::bc}) {
    if (text == to_string(s)) {
      return s;
    }
  }
  throw DomainError("unknown verify scope '" + text + "'");
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string hamming_name(std::uint64_t L, std::uint32_t n) {
  return "K_" + std::to_string(L) + "^" + std::to_string(n);
}

// Folds many cases into one check line that reports the first failure.
class Tally {
public:
  Tally(std::string name, std::string expected)
      : name_(std::move(name)), expected_(std::move(expected)) {}

  void record(bool ok, const std::function<std::string()>& detail) {
    ++cases_;
    if (!ok) {
      if (failures_ == 0) {
        first_ = detail();
      }
      ++failures_;
    }
  }

  Check done() const {
    Check c{name_, expected_, "", failures_ == 0, false};
    if (failures_ == 0) {
      c.actual = std::to_string(cases_) + " cases hold";
    } else {
      c.actual = std::to_string(failures_) + " of " + std::to_string(cases_) +
                 " cases fail; first: " + first_;
    }
    return c;
  }

private:
  std::string name_;
  std::string expected_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

Check equal_check(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual, false};
}

// ---------------------------------------------------------------------------

struct ReferenceCell {
  std::uint64_t L;
  std::uint32_t n;
  std::uint64_t m;
  const char* decomposition;
  const char* last_vertex;
  std::uint64_t ex;
  std::uint64_t xi;
};

// K_5^2, m=7 is listed in the literature as ex=42, xi=14; enumeration over all
// 7-subsets of the 5x5 rook's graph gives 26 and 30.
constexpr ReferenceCell kReferenceCells[] = {
    {2, 4, 5, "1*2^2 + 1*2^0", "0100", 10, 10},
    {3, 4, 8, "2*3^1 + 2*3^0", "0021", 28, 36},
    {4, 4, 10, "2*4^1 + 2*4^0", "0021", 42, 78},
    {5, 2, 7, "1*5^1 + 2*5^0", "11", 26, 30},
    {10, 2, 12, "1*10^1 + 2*10^0", "11", 96, 120},
};

void tables(std::vector<Check>& out) {
  for (const auto& cell : kReferenceCells) {
    const HammingParams p(cell.L, cell.n);
    const std::string where = hamming_name(cell.L, cell.n) + " m=" + std::to_string(cell.m);
    out.push_back(equal_check("decomposition " + where, cell.decomposition,
                              decompose(cell.m, cell.L).to_string()));
    out.push_back(equal_check("ex/xi " + where,
                              "ex=" + std::to_string(cell.ex) + " xi=" + std::to_string(cell.xi),
                              "ex=" + std::to_string(ex(cell.m, p)) +
                                  " xi=" + std::to_string(xi(cell.m, p))));
    const VertexSet set = optimal_set(cell.m, p);
    out.push_back(equal_check("last optimal vertex " + where, cell.last_vertex,
                              encode(set.members().back(), p).to_string()));
    const CutReport r = evaluate_cut(hamming_graph(p), set);
    out.push_back(equal_check(
        "witness census " + where,
        "cut=" + std::to_string(cell.xi) + " internal=" + std::to_string(cell.ex / 2) +
            " connected=both",
        "cut=" + std::to_string(r.cut_size) + " internal=" + std::to_string(r.internal_edges) +
            " connected=" +
            (r.side_connected && r.complement_connected ? "both" : "not both")));
  }

  Tally cliques("clique tables I_i, delta_i for L=2..10", "I_i = i(i-1)/2, delta_i = i-1");
  for (std::uint64_t L = 2; L <= 10; ++L) {
    const CliqueTables t(L);
    for (std::uint64_t i = 0; i <= L; ++i) {
      cliques.record(t.edges[i] == i * (i == 0 ? 0 : i - 1) / 2,
                     [&] { return "I_" + std::to_string(i) + " for L=" + std::to_string(L); });
      if (i >= 1) {
        cliques.record(t.increments[i] == i - 1, [&] {
          return "delta_" + std::to_string(i) + " for L=" + std::to_string(L);
        });
      }
    }
  }
  out.push_back(cliques.done());

  using Kind = ConditionKind::Kind;
  for (const Kind kind : {Kind::extra, Kind::embedded, Kind::super, Kind::average,
                          Kind::isoperimetric}) {
    Tally row(ConditionKind::kind_name(kind) + " row, L=2..10, n=2..8, t=0..n-1",
              "(L-1)(n-t)L^t");
    for (std::uint64_t L = 2; L <= 10; ++L) {
      for (std::uint32_t n = 2; n <= 8; ++n) {
        const HammingParams p(L, n);
        for (std::uint32_t t = 0; t < n; ++t) {
          const std::uint64_t expected = (L - 1) * (n - t) * p.power(t);
          std::optional<ConditionKind> cond;
          switch (kind) {
          case Kind::extra:
            cond = ConditionKind::extra(p.power(t));
            break;
          case Kind::isoperimetric:
            cond = ConditionKind::isoperimetric(p.power(t));
            break;
          case Kind::embedded:
            cond = ConditionKind::embedded(t);
            break;
          case Kind::super:
            cond = ConditionKind::super((L - 1) * t);
            break;
          default:
            cond = ConditionKind::average((L - 1) * t);
            break;
          }
          std::string got;
          try {
            got = std::to_string(conditional_connectivity(*cond, p));
          } catch (const Error& e) {
            got = e.what();
          }
          row.record(got == std::to_string(expected), [&] {
            return hamming_name(L, n) + " t=" + std::to_string(t) + ": " + got +
                   " != " + std::to_string(expected);
          });
        }
      }
    }
    out.push_back(row.done());
  }

  Tally cyclic("cyclic row, L=2..10, n=2..8",
               "(n-2)4 for L=2, 2(n-1)3 for L=3, 3[(L-1)n-2] for L>=4");
  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 2; n <= 8; ++n) {
      const HammingParams p(L, n);
      if (L == 2 && n == 2) {
        // Q_2 is the 4-cycle: no cut leaves a cycle on both sides.
        bool rejected = false;
        try {
          conditional_connectivity(ConditionKind::cyclic(), p);
        } catch (const DomainError&) {
          rejected = true;
        }
        cyclic.record(rejected, [] { return "K_2^2 not rejected"; });
        continue;
      }
      const std::uint64_t expected = L == 2   ? (n - 2) * 4
                                     : L == 3 ? 2 * (n - 1) * 3
                                              : 3 * ((L - 1) * n - 2);
      const std::uint64_t got = conditional_connectivity(ConditionKind::cyclic(), p);
      cyclic.record(got == expected, [&] {
        return hamming_name(L, n) + ": " + std::to_string(got) + " != " + std::to_string(expected);
      });
    }
  }
  out.push_back(cyclic.done());
}

// ---------------------------------------------------------------------------

constexpr std::uint64_t kExhaustiveLimit = 10'000;
constexpr std::uint64_t kSamplesPerCase = 10'000;

void lemmas(std::vector<Check>& out) {
  Tally first_interval("xi nondecreasing for 1 <= m < L^floor(n/2), L<=10, n<=8",
                       "xi(m+1) >= xi(m)");
  Tally block_steps("xi((g+1)L^t) >= xi(gL^t), 0<=g<=L-2, 0<=t<=n-2",
                    "nonnegative step (xi(0) = 0)");
  Tally block_tails("xi(gL^t + h) >= xi(gL^t), 0<=g<=L-1, 0<=t<=n-2, h<L^t",
                    "nonnegative step (xi(0) = 0)");
  Tally powers("xi(L^(t+1)) >= xi(L^t), 0<=t<=n-2", "nonnegative step");
  Tally below_top("xi(m) >= xi(gL^t) for gL^t <= m <= L^(n-1)",
                  "holds (exhaustive when L^n <= 1e4, else 1e4 samples per (g,t))");
  Tally top_layer("xi(m) >= xi(L^(n-1)) for L^(n-1) <= m <= floor(L^n/2)",
                  "holds (exhaustive when L^n <= 1e4, else 1e4 samples)");
  Tally anywhere("xi(m) >= xi(gL^t) for gL^t <= m <= floor(L^n/2)",
                 "holds (exhaustive when L^n <= 1e4, else 1e4 samples per (g,t))");
  Tally blocks("g[(L-1)(n-t)-(g-1)]L^t = xi(gL^t) on the grid", "identity");
  std::mt19937_64 rng(20240611);

  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const HammingParams p(L, n);
      const std::string where = hamming_name(L, n);
      auto xi0 = [&](std::uint64_t m) { return m == 0 ? 0 : xi(m, p); };

      const std::uint64_t first_end = p.first_interval_end();
      for (std::uint64_t m = 1; m < first_end; ++m) {
        first_interval.record(xi(m + 1, p) >= xi(m, p),
                              [&] { return where + " m=" + std::to_string(m); });
      }

      for (std::uint32_t t = 0; t + 2 <= n; ++t) {
        const std::uint64_t Lt = p.power(t);
        for (std::uint64_t g = 0; g + 2 <= L; ++g) {
          block_steps.record(xi0((g + 1) * Lt) >= xi0(g * Lt), [&] {
            return where + " g=" + std::to_string(g) + " t=" + std::to_string(t);
          });
        }
        for (std::uint64_t g = 0; g + 1 <= L; ++g) {
          const std::uint64_t base = xi0(g * Lt);
          for (std::uint64_t h = 1; h < Lt; ++h) {
            block_tails.record(xi(g * Lt + h, p) >= base, [&] {
              return where + " g=" + std::to_string(g) + " t=" + std::to_string(t) +
                     " h=" + std::to_string(h);
            });
          }
        }
        powers.record(xi(p.power(t + 1), p) >= xi(Lt, p),
                      [&] { return where + " t=" + std::to_string(t); });
      }

      const std::uint64_t half = p.half();
      const bool exhaustive = p.vertex_count() <= kExhaustiveLimit;
      std::vector<std::uint64_t> table;
      if (exhaustive) {
        table.resize(half + 1);
        for (std::uint64_t m = 1; m <= half; ++m) table[m] = xi(m, p);
      }
      auto value = [&](std::uint64_t m) { return exhaustive ? table[m] : xi(m, p); };
      // Checks xi(m) >= xi(base) for m in [base, top].
      auto range_check = [&](Tally& tally, std::uint64_t base, std::uint64_t top,
                             const std::string& label) {
        if (base > top) return;
        const std::uint64_t floor_value = value(base);
        if (exhaustive) {
          for (std::uint64_t m = base; m <= top; ++m) {
            tally.record(table[m] >= floor_value,
                         [&] { return where + " " + label + " m=" + std::to_string(m); });
          }
        } else {
          std::uniform_int_distribution<std::uint64_t> pick(base, top);
          for (std::uint64_t s = 0; s < kSamplesPerCase; ++s) {
            const std::uint64_t m = pick(rng);
            tally.record(xi(m, p) >= floor_value,
                         [&] { return where + " " + label + " m=" + std::to_string(m); });
          }
        }
      };

      for (std::uint32_t t = 0; t < n; ++t) {
        for (std::uint64_t g = 1; g < L; ++g) {
          const std::uint64_t base = checked::narrow(checked::mul(g, p.power(t)));
          if (base > half) break;
          const std::string label = "g=" + std::to_string(g) + " t=" + std::to_string(t);
          blocks.record(lambda_gLt(g, t, p) == xi(base, p), [&] { return where + " " + label; });
          if (n >= 2) range_check(below_top, base, p.power(n - 1), label);
          range_check(anywhere, base, half, label);
        }
      }
      range_check(top_layer, p.power(n - 1), half, "top layer");
    }
  }

  Tally additivity("ex(h1+h2) = ex(h1) + ex(h2) + 2(sum a_i)h2, L<=6, n<=6",
                   "identity for every split of the decomposition");
  for (std::uint64_t L = 2; L <= 6; ++L) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const HammingParams p(L, n);
      for (std::uint64_t h = 2; h <= p.first_interval_end(); ++h) {
        const auto decomposition = decompose(h, L);
        const auto& terms = decomposition.terms();
        std::uint64_t h1 = 0;
        for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
          h1 += terms[k].coefficient * p.power(terms[k].exponent);
          const std::uint64_t h2 = h - h1;
          additivity.record(ex_additivity_split(h1, h2, p) == ex(h, p), [&] {
            return hamming_name(L, n) + " h1=" + std::to_string(h1) + " h2=" + std::to_string(h2);
          });
        }
      }
    }
  }

  Tally binary("hypercube expression = general expression, m <= 2^12", "identity");
  const HammingParams q(2, 13);
  for (std::uint64_t m = 1; m <= 4096; ++m) {
    binary.record(ex_hypercube(m, q) == ex(m, q), [&] { return "m=" + std::to_string(m); });
  }
  Tally ternary("ternary expression = general expression, m <= 3^8", "identity");
  const HammingParams r(3, 9);
  for (std::uint64_t m = 1; m <= 6561; ++m) {
    ternary.record(ex_ternary(m, r) == ex(m, r), [&] { return "m=" + std::to_string(m); });
  }

  for (const auto* t : {&first_interval, &block_steps, &block_tails, &powers, &below_top,
                        &top_layer, &anywhere, &blocks, &additivity, &binary, &ternary}) {
    out.push_back(t->done());
  }
}

// ---------------------------------------------------------------------------

std::vector<ConditionKind> condition_grid(const HammingParams& p) {
  std::vector<ConditionKind> out;
  for (std::uint64_t h = 1; h <= p.first_interval_end(); ++h) {
    out.push_back(ConditionKind::extra(h));
    out.push_back(ConditionKind::isoperimetric(h));
  }
  for (std::uint32_t t = 0; t < p.dimension(); ++t) {
    out.push_back(ConditionKind::embedded(t));
    out.push_back(ConditionKind::super((p.arity() - 1) * t));
    out.push_back(ConditionKind::average((p.arity() - 1) * t));
  }
  out.push_back(ConditionKind::cyclic());
  return out;
}

Check skipped_check(const std::string& name, const std::string& why) {
  return {name, "run", "skipped: " + why, true, true};
}

void oracle(std::vector<Check>& out, const Options& options) {
  struct Instance {
    std::uint64_t L;
    std::uint32_t n;
    bool slow;
  };
  const Instance instances[] = {{2, 2, false}, {2, 3, false}, {2, 4, false}, {3, 2, false},
                                {4, 2, false}, {5, 2, false}, {3, 3, true}};
  for (const auto& inst : instances) {
    const HammingParams p(inst.L, inst.n);
    const std::string name = "beta = xi_e = xi = closed form on " + hamming_name(inst.L, inst.n) +
                             ", m=1.." + std::to_string(p.half());
    if (inst.slow && !options.full) {
      out.push_back(skipped_check(name, "needs --full"));
      continue;
    }
    if (p.vertex_count() > options.budget.max_vertices) {
      out.push_back(skipped_check(name, std::to_string(p.vertex_count()) +
                                            " vertices above the cap"));
      continue;
    }
    const Graph g = hamming_graph(p);
    Tally tally(name, "all four agree");
    for (std::uint64_t m = 1; m <= p.half(); ++m) {
      const std::uint64_t expected = xi(m, p);
      const std::uint64_t b = brute_beta(g, m, options.budget).optimum;
      const std::uint64_t e = brute_xi_e(g, m, options.budget).optimum;
      const std::uint64_t x = brute_xi(g, m, options.budget).optimum;
      tally.record(b == expected && e == expected && x == expected, [&] {
        return "m=" + std::to_string(m) + " beta=" + std::to_string(b) + " xi_e=" +
               std::to_string(e) + " xi=" + std::to_string(x) + " closed=" +
               std::to_string(expected);
      });
    }
    out.push_back(tally.done());
  }

  for (const auto& [L, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 3}, {2, 4}, {3, 2}}) {
    const HammingParams p(L, n);
    const std::string where = hamming_name(L, n);
    if (p.vertex_count() > options.budget.max_vertices) {
      const std::string why = std::to_string(p.vertex_count()) + " vertices above the cap";
      out.push_back(skipped_check("conditional cuts on " + where + " match the closed form", why));
      out.push_back(
          skipped_check("minimum conditional cuts on " + where + " have exactly two parts", why));
      continue;
    }
    const Graph g = hamming_graph(p);
    Tally values("conditional cuts on " + where + " match the closed form",
                 "equal optimum; atom size = theta when theta = gL^t");
    Tally bipartite("minimum conditional cuts on " + where + " have exactly two parts",
                    "no cheaper-or-equal cut with three or more parts");
    for (const auto& cond : condition_grid(p)) {
      std::string closed;
      try {
        closed = std::to_string(conditional_connectivity(cond, p));
      } catch (const DomainError&) {
        closed = "undefined";
      }
      std::string brute;
      std::uint64_t atom = 0;
      try {
        const FragmentResult r = brute_conditional(g, cond, options.budget);
        brute = std::to_string(r.optimum);
        atom = r.atom_size;
      } catch (const InfeasibleResult&) {
        brute = "undefined";
      }
      values.record(closed == brute, [&] {
        return cond.to_string() + ": closed " + closed + ", enumerated " + brute;
      });
      if (brute != "undefined") {
        std::optional<std::uint64_t> theta;
        const bool sized = cond.kind() == ConditionKind::Kind::extra ||
                           cond.kind() == ConditionKind::Kind::isoperimetric;
        if (cond.structure(p) || (sized && as_g_power(cond.parameter(), L))) {
          theta = cond.theta(p);
        }
        if (theta) {
          values.record(atom == *theta, [&] {
            return cond.to_string() + ": atom " + std::to_string(atom) + ", theta " +
                   std::to_string(*theta);
          });
        }
        if (options.full) {
          bipartite.record(bipartite_property_check(g, cond, options.budget),
                           [&] { return cond.to_string(); });
        }
      }
    }
    out.push_back(values.done());
    if (options.full) {
      out.push_back(bipartite.done());
    } else {
      out.push_back(skipped_check("minimum conditional cuts on " + where + " have exactly two parts",
                                  "needs --full"));
    }
  }
}

// ---------------------------------------------------------------------------

void bc(std::vector<Check>& out, const Options& options) {
  struct Variant {
    MatchingPolicy policy;
    std::uint64_t seed;
  };
  const Variant variants[] = {{MatchingPolicy::identity, 0},     {MatchingPolicy::reversal, 0},
                              {MatchingPolicy::seeded_random, 1}, {MatchingPolicy::seeded_random, 2},
                              {MatchingPolicy::seeded_random, 3}, {MatchingPolicy::seeded_random, 4},
                              {MatchingPolicy::seeded_random, 5}, {MatchingPolicy::seeded_random, 42}};
  for (const std::uint32_t n : {3u, 4u}) {
    const HammingParams cube(2, n);
    for (const auto& v : variants) {
      const Graph g = bc_network(n, v.policy, v.seed);
      const std::string where = g.label().to_string();
      Tally tally("xi on " + where + " = xi on K_2^" + std::to_string(n) + ", m=1.." +
                      std::to_string(cube.half()),
                  "equal for every m");
      for (std::uint64_t m = 1; m <= cube.half(); ++m) {
        const std::uint64_t got = brute_xi(g, m, options.budget).optimum;
        const std::uint64_t expected = xi(m, cube);
        tally.record(got == expected, [&] {
          return "m=" + std::to_string(m) + ": " + std::to_string(got) + " != " +
                 std::to_string(expected);
        });
      }
      out.push_back(tally.done());
      if (n == 4) {
        out.push_back(equal_check("4-extra edge-connectivity of " + where, "8",
                                  std::to_string(brute_lambda_h(g, 4, options.budget).optimum)));
      }
    }
  }
}

} // namespace

SuiteReport run(Scope scope, const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.scope = scope;
  switch (scope) {
  case Scope::tables:
    tables(report.checks);
    break;
  case Scope::lemmas:
    lemmas(report.checks);
    break;
  case Scope::oracle:
    oracle(report.checks, options);
    break;
  case Scope::bc:
    bc(report.checks, options);
    break;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace isocut::verify

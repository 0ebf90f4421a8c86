#include <doctest.h>

#include <algorithm>

#include "isocut/closedform.hpp"
#include "isocut/error.hpp"

using namespace isocut;

namespace {

using Terms = std::vector<LBaseTerm>;

} // namespace

TEST_CASE("decompose examples") {
  CHECK(decompose(5, 2).terms() == Terms{{1, 2}, {1, 0}});
  CHECK(decompose(8, 3).terms() == Terms{{2, 1}, {2, 0}});
  CHECK(decompose(12, 10).terms() == Terms{{1, 1}, {2, 0}});
  CHECK(decompose(8, 3).to_string() == "2*3^1 + 2*3^0");
  CHECK(decompose(8, 3).coefficient_sum() == 4);
  CHECK_THROWS_AS(decompose(0, 3), DomainError);
  CHECK_THROWS_AS(decompose(3, 1), DomainError);
  CHECK_THROWS_AS(LBaseDecomposition(3, {{3, 0}}), DomainError);
  CHECK_THROWS_AS(LBaseDecomposition(3, {{1, 0}, {1, 1}}), DomainError);
}

TEST_CASE("decompose roundtrip") {
  for (std::uint64_t L = 2; L <= 16; ++L) {
    for (std::uint64_t m = 1; m <= 1'000'000; ++m) {
      const auto d = decompose(m, L);
      if (d.value() != m) {
        FAIL("L=" << L << " m=" << m);
      }
    }
  }
  CHECK(decompose(999'999, 10).terms().size() == 6);
}

TEST_CASE("clique tables") {
  CHECK(clique_edges(0) == 0);
  CHECK(clique_edges(4) == 6);
  CHECK(clique_increment(1) == 0);
  CHECK(clique_increment(5) == 4);
  CHECK_THROWS_AS(clique_increment(0), DomainError);
  const CliqueTables k4(4);
  CHECK(k4.edges == std::vector<std::uint64_t>{0, 0, 1, 3, 6});
  for (std::uint64_t i = 1; i <= 4; ++i) {
    CHECK(k4.increments[i] == k4.edges[i] - k4.edges[i - 1]);
  }
}

TEST_CASE("ex examples") {
  CHECK(ex(5, HammingParams(2, 4)) == 10);
  CHECK(ex(8, HammingParams(3, 4)) == 28);
  CHECK(ex(10, HammingParams(4, 4)) == 42);
  CHECK(ex(12, HammingParams(10, 2)) == 96);
  for (std::uint64_t L = 2; L <= 6; ++L) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const HammingParams p(L, n);
      CHECK(ex(1, p) == 0);
      CHECK(ex(p.vertex_count(), p) == p.degree() * p.vertex_count());
    }
  }
}

TEST_CASE("xi examples") {
  CHECK(xi(5, HammingParams(2, 4)) == 10);
  CHECK(xi(8, HammingParams(3, 4)) == 36);
  CHECK(xi(10, HammingParams(4, 4)) == 78);
  CHECK(xi(12, HammingParams(10, 2)) == 120);
  // K_5^2, m = 1*5 + 2: a full row plus two cells of the next
  CHECK(ex(7, HammingParams(5, 2)) == 26);
  CHECK(xi(7, HammingParams(5, 2)) == 30);
  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 1; n <= 5; ++n) {
      const HammingParams p(L, n);
      CHECK(xi(1, p) == p.degree());
    }
  }
  CHECK(xi(1, HammingParams(3, 1)) == 2);
  CHECK_THROWS_AS(xi(0, HammingParams(2, 4)), DomainError);
  CHECK_THROWS_AS(xi(9, HammingParams(2, 4)), DomainError);
}

TEST_CASE("ex is even and within the degree sum") {
  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const HammingParams p(L, n);
      const std::uint64_t top = std::min<std::uint64_t>(p.vertex_count(), 20'000);
      for (std::uint64_t m = 1; m <= top; ++m) {
        const std::uint64_t e = ex(m, p);
        if (e % 2 != 0 || e > p.degree() * m) {
          FAIL("L=" << L << " n=" << n << " m=" << m << " ex=" << e);
        }
      }
    }
  }
}

TEST_CASE("ex is symmetric under complement") {
  // an induced subgraph and its complement share the same cut
  for (std::uint64_t L = 2; L <= 6; ++L) {
    for (std::uint32_t n = 1; n <= 5; ++n) {
      const HammingParams p(L, n);
      const std::uint64_t N = p.vertex_count();
      for (std::uint64_t m = 1; m < N; ++m) {
        const std::uint64_t cut_set = p.degree() * m - ex(m, p);
        const std::uint64_t cut_rest = p.degree() * (N - m) - ex(N - m, p);
        REQUIRE(cut_set == cut_rest);
      }
    }
  }
}

TEST_CASE("xi is nondecreasing on the first interval") {
  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const HammingParams p(L, n);
      for (std::uint64_t m = 1; m < p.first_interval_end() && m < p.half(); ++m) {
        REQUIRE(xi(m + 1, p) >= xi(m, p));
      }
    }
  }
}

TEST_CASE("lambda_gLt") {
  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const HammingParams p(L, n);
      for (std::uint32_t t = 0; t < n; ++t) {
        CHECK(lambda_gLt(1, t, p) == (L - 1) * (n - t) * p.power(t));
        for (std::uint64_t g = 1; g < L; ++g) {
          if (g * p.power(t) > p.half()) {
            CHECK_THROWS_AS(lambda_gLt(g, t, p), DomainError);
            continue;
          }
          CHECK(lambda_gLt(g, t, p) == xi(g * p.power(t), p));
        }
      }
      if (L >= 4 && p.half() >= 3) {
        CHECK(lambda_gLt(3, 0, p) == 3 * ((L - 1) * n - 2));
      }
    }
  }
  for (std::uint32_t n = 1; n <= 10; ++n) {
    CHECK(lambda_gLt(1, 0, HammingParams(2, n)) == n);
  }
  CHECK_THROWS_AS(lambda_gLt(0, 0, HammingParams(3, 2)), DomainError);
  CHECK_THROWS_AS(lambda_gLt(1, 2, HammingParams(3, 2)), DomainError);
}

TEST_CASE("conditional connectivity examples") {
  for (std::uint32_t n = 3; n <= 10; ++n) {
    CHECK(conditional_connectivity(ConditionKind::cyclic(), HammingParams(2, n)) == 4 * (n - 2));
    CHECK(conditional_connectivity(ConditionKind::extra(4), HammingParams(2, n)) == 4 * n - 8);
  }
  for (std::uint32_t n = 1; n <= 8; ++n) {
    for (std::uint32_t t = 0; t < n; ++t) {
      const HammingParams p(3, n);
      CHECK(conditional_connectivity(ConditionKind::embedded(t), p) == 2 * (n - t) * p.power(t));
    }
  }
  CHECK(conditional_connectivity(ConditionKind::cyclic(), HammingParams(10, 3)) == 75);
  CHECK(conditional_connectivity(ConditionKind::embedded(2), HammingParams(2, 5)) == 12);
  CHECK(conditional_connectivity(ConditionKind::extra(1), HammingParams(2, 4)) == 4);
  CHECK_THROWS_AS(conditional_connectivity(ConditionKind::cyclic(), HammingParams(2, 2)),
                  DomainError);
}

TEST_CASE("structured kinds share one value") {
  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 2; n <= 8; ++n) {
      const HammingParams p(L, n);
      for (std::uint32_t t = 0; t < n; ++t) {
        const std::uint64_t expected = (L - 1) * (n - t) * p.power(t);
        CHECK(conditional_connectivity(ConditionKind::embedded(t), p) == expected);
        CHECK(conditional_connectivity(ConditionKind::super((L - 1) * t), p) == expected);
        CHECK(conditional_connectivity(ConditionKind::average((L - 1) * t), p) == expected);
        CHECK(conditional_connectivity(ConditionKind::extra(p.power(t)), p) == expected);
        CHECK(conditional_connectivity(ConditionKind::isoperimetric(p.power(t)), p) == expected);
      }
    }
  }
}

TEST_CASE("super and average need multiples of L-1") {
  const HammingParams p(3, 4);
  CHECK_THROWS_AS(conditional_connectivity(ConditionKind::super(1), p), UnsupportedError);
  CHECK_THROWS_AS(conditional_connectivity(ConditionKind::average(3), p), UnsupportedError);
  CHECK_THROWS_AS(ConditionKind::super(5).theta(p), UnsupportedError);
  CHECK_THROWS_AS(conditional_connectivity(ConditionKind::super(8), p), DomainError);
}

TEST_CASE("theta and structure") {
  const HammingParams q4(2, 4);
  CHECK(ConditionKind::cyclic().theta(q4) == 4);
  CHECK(ConditionKind::cyclic().theta(HammingParams(3, 2)) == 3);
  CHECK(ConditionKind::cyclic().theta(HammingParams(7, 2)) == 3);
  CHECK(ConditionKind::embedded(2).theta(HammingParams(3, 4)) == 9);
  CHECK(ConditionKind::super(4).theta(HammingParams(3, 4)) == 9);
  CHECK(ConditionKind::extra(6).theta(q4) == 6);
  CHECK_FALSE(ConditionKind::extra(6).structure(q4).has_value());
  const auto cyc = ConditionKind::cyclic().structure(HammingParams(5, 3));
  REQUIRE(cyc.has_value());
  CHECK(cyc->first == 3);
  CHECK(cyc->second == 0);
  const auto cube = ConditionKind::cyclic().structure(q4);
  REQUIRE(cube.has_value());
  CHECK(*cube == std::pair<std::uint64_t, std::uint32_t>{1, 2});
}

TEST_CASE("extra beyond the first interval") {
  const HammingParams q4(2, 4);
  // 8 = 2^3 still resolves; 6 is neither small enough nor of the form g L^t
  CHECK(conditional_connectivity(ConditionKind::extra(8), q4) == xi(8, q4));
  CHECK_THROWS_AS(conditional_connectivity(ConditionKind::extra(6), q4), DomainError);
  CHECK(lambda_extra_scan(6, q4, 100) == std::min({xi(6, q4), xi(7, q4), xi(8, q4)}));
}

TEST_CASE("lambda_extra_scan") {
  const HammingParams q4(2, 4);
  // xi(5) = 10 but xi(8) = 8 lies inside the range
  CHECK(xi(5, q4) == 10);
  CHECK(lambda_extra_scan(5, q4, 100) == 8);
  std::uint64_t expected = xi(3, q4);
  for (std::uint64_t m = 4; m <= 8; ++m) {
    expected = std::min(expected, xi(m, q4));
  }
  CHECK(lambda_extra_scan(3, q4, 100) == expected);
  for (std::uint64_t L = 2; L <= 6; ++L) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const HammingParams p(L, n);
      CHECK(lambda_extra_scan(1, p, 1'000'000) == p.degree());
    }
  }
  CHECK_THROWS_AS(lambda_extra_scan(1, q4, 3), ScanBudgetExceeded);
  CHECK_THROWS_AS(lambda_extra_scan(9, q4, 100), DomainError);
}

TEST_CASE("additivity split") {
  CHECK(ex_additivity_split(4, 1, HammingParams(2, 4)) == 10);
  CHECK(ex_additivity_split(6, 2, HammingParams(3, 4)) == 28);
  CHECK_THROWS_AS(ex_additivity_split(1, 2, HammingParams(3, 4)), DomainError);
  CHECK_THROWS_AS(ex_additivity_split(4, 0, HammingParams(2, 4)), DomainError);
  for (std::uint64_t L = 2; L <= 6; ++L) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const HammingParams p(L, n);
      for (std::uint64_t h1 = 1; h1 <= p.first_interval_end(); ++h1) {
        if (h1 % L == 0) {
          CHECK(ex_additivity_split(h1, 1, p) ==
                ex(h1, p) + 2 * decompose(h1, L).coefficient_sum());
        }
        // every split of the decomposition after its leading k terms
        const auto d = decompose(h1, L);
        const auto& terms = d.terms();
        std::uint64_t head = 0;
        for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
          head += terms[k].coefficient * p.power(terms[k].exponent);
          REQUIRE(ex_additivity_split(head, h1 - head, p) == ex(h1, p));
        }
      }
    }
  }
}

TEST_CASE("specialised expressions match the general one") {
  const HammingParams cube(2, 13);
  for (std::uint64_t m = 1; m <= 4096; ++m) {
    REQUIRE(ex_hypercube(m, cube) == ex(m, cube));
  }
  const HammingParams ternary(3, 9);
  for (std::uint64_t m = 1; m <= 6561; ++m) {
    REQUIRE(ex_ternary(m, ternary) == ex(m, ternary));
  }
  CHECK_THROWS_AS(ex_hypercube(3, HammingParams(3, 4)), DomainError);
  CHECK_THROWS_AS(ex_ternary(3, HammingParams(2, 4)), DomainError);
}

TEST_CASE("as_g_power") {
  CHECK_FALSE(as_g_power(12, 10).has_value());
  CHECK(as_g_power(300, 10) == std::pair<std::uint64_t, std::uint32_t>{3, 2});
  CHECK(as_g_power(1, 7) == std::pair<std::uint64_t, std::uint32_t>{1, 0});
  CHECK_FALSE(as_g_power(6, 2).has_value());
}

TEST_CASE("condition kind names") {
  CHECK(ConditionKind::extra(4).to_string() == "extra(4)");
  CHECK(ConditionKind::cyclic().to_string() == "cyclic");
  CHECK(ConditionKind::parse_kind("super") == ConditionKind::Kind::super);
  CHECK(ConditionKind::kind_name(ConditionKind::Kind::isoperimetric) == "isoperimetric");
  CHECK_THROWS_AS(ConditionKind::parse_kind("mega"), DomainError);
}

TEST_CASE("large parameters stay exact or raise") {
  const HammingParams big(1ull << 31, 2);
  CHECK(xi(1, big) == 2 * ((1ull << 31) - 1));
  CHECK_THROWS_AS(xi(big.half(), big), OverflowError);
}

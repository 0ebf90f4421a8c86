#include <doctest.h>

#include <sstream>

#include "isocut/error.hpp"
#include "isocut/graphs.hpp"

using namespace isocut;

TEST_CASE("hamming graph sizes") {
  const Graph q4 = hamming_graph(HammingParams(2, 4));
  CHECK(q4.vertex_count() == 16);
  CHECK(q4.edge_count() == 32);
  CHECK(q4.is_regular(4));

  const Graph k10 = hamming_graph(HammingParams(10, 2));
  CHECK(k10.vertex_count() == 100);
  CHECK(k10.edge_count() == 900);
  CHECK(k10.is_regular(18));

  const Graph k3 = hamming_graph(HammingParams(3, 4));
  CHECK(k3.vertex_count() == 81);
  for (std::uint32_t v = 0; v < k3.vertex_count(); ++v) {
    CHECK(k3.degree(v) == 8);
  }
}

TEST_CASE("hamming adjacency is one differing digit") {
  for (std::uint64_t L = 2; L <= 5; ++L) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const HammingParams p(L, n);
      const Graph g = hamming_graph(p);
      CHECK(g.is_regular(static_cast<std::uint32_t>(p.degree())));
      CHECK(g.is_connected());
      for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        const auto su = encode(u, p);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
          const auto sv = encode(v, p);
          int differ = 0;
          for (std::size_t i = 0; i < su.length(); ++i) {
            differ += su.digits()[i] != sv.digits()[i];
          }
          CHECK(g.has_edge(u, v) == (differ == 1));
        }
      }
    }
  }
}

TEST_CASE("hamming params domain") {
  CHECK_THROWS_AS(HammingParams(1, 3), DomainError);
  CHECK_THROWS_AS(HammingParams(2, 0), DomainError);
  CHECK_THROWS_AS(HammingParams(2, 64), OverflowError);
  CHECK_THROWS_AS(hamming_graph(HammingParams(10, 7)), OverflowError);
  CHECK_THROWS_AS(bc_network(21, MatchingPolicy::identity), OverflowError);
  const HammingParams p(3, 4);
  CHECK(p.vertex_count() == 81);
  CHECK(p.half() == 40);
  CHECK(p.degree() == 8);
  CHECK(p.first_interval_end() == 9);
  CHECK(p.power(4) == 81);
  CHECK_THROWS_AS(p.power(5), DomainError);
}

TEST_CASE("bc network") {
  CHECK(bc_network(3, MatchingPolicy::identity) == hamming_graph(HammingParams(2, 3)));

  const Graph c4 = bc_network(2, MatchingPolicy::seeded_random, 7);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.is_regular(2));
  CHECK(c4.is_connected());

  const Graph b4 = bc_network(4, MatchingPolicy::seeded_random, 42);
  CHECK(b4.vertex_count() == 16);
  CHECK(b4.is_regular(4));
  CHECK(b4.is_connected());
}

TEST_CASE("bc network identity equals hypercube, all policies regular") {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    CHECK(bc_network(n, MatchingPolicy::identity) == hamming_graph(HammingParams(2, n)));
    const Graph r = bc_network(n, MatchingPolicy::reversal);
    CHECK(r.is_regular(n));
    CHECK(r.is_connected());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = bc_network(n, MatchingPolicy::seeded_random, seed);
      CHECK(g.vertex_count() == (1u << n));
      CHECK(g.is_regular(n));
      CHECK(g.is_connected());
    }
  }
}

TEST_CASE("bc network is reproducible per seed") {
  CHECK(bc_network(6, MatchingPolicy::seeded_random, 5) ==
        bc_network(6, MatchingPolicy::seeded_random, 5));
  CHECK_FALSE(bc_network(6, MatchingPolicy::seeded_random, 5) ==
              bc_network(6, MatchingPolicy::seeded_random, 6));
  CHECK(parse_matching_policy("reversal") == MatchingPolicy::reversal);
  CHECK_THROWS_AS(parse_matching_policy("zigzag"), DomainError);
}

TEST_CASE("encode and decode") {
  CHECK(encode(5, HammingParams(2, 4)).to_string() == "0101");
  CHECK(decode(VertexString::parse("0021", 3), HammingParams(3, 4)) == 7);
  CHECK(encode(0, HammingParams(7, 3)).to_string() == "000");
  CHECK(encode(0, HammingParams(40, 2)).to_string() == "0.0");
  CHECK_THROWS_AS(VertexString::parse("0031", 3), DomainError);
}

TEST_CASE("encode decode roundtrip and lex order match integers") {
  for (std::uint64_t L = 2; L <= 10; ++L) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const HammingParams p(L, n);
      if (p.vertex_count() > 10'000) {
        break;
      }
      for (std::uint64_t id = 0; id < p.vertex_count(); ++id) {
        const auto s = encode(id, p);
        REQUIRE(decode(s, p) == id);
        REQUIRE(decode(VertexString::parse(s.to_string(), L), p) == id);
      }
      // neighbouring pairs plus a stride cover the ordering without N^2 work
      for (std::uint64_t a = 0; a < p.vertex_count(); ++a) {
        for (std::uint64_t b : {a, a + 1, a + 7, p.vertex_count() - 1 - a}) {
          if (b >= p.vertex_count()) {
            continue;
          }
          REQUIRE(lex_compare(encode(a, p), encode(b, p)) == (a <=> b));
        }
      }
    }
  }
}

TEST_CASE("lex compare examples") {
  const HammingParams q4(2, 4);
  const HammingParams k3(3, 4);
  CHECK(lex_compare(VertexString::parse("0001", 2), VertexString::parse("0010", 2)) ==
        std::strong_ordering::less);
  CHECK(lex_compare(VertexString::parse("0100", 2), VertexString::parse("0100", 2)) ==
        std::strong_ordering::equal);
  CHECK(lex_compare(VertexString::parse("0021", 3), VertexString::parse("0100", 3)) ==
        std::strong_ordering::less);
  CHECK(decode(VertexString::parse("0021", 3), k3) < decode(VertexString::parse("0100", 3), k3));
  CHECK(decode(VertexString::parse("0010", 2), q4) == 2);
}

TEST_CASE("edge list roundtrip") {
  const Graph g = bc_network(4, MatchingPolicy::seeded_random, 3);
  std::stringstream buffer;
  write_edge_list(buffer, g);
  const std::string text = buffer.str();
  CHECK(text.rfind("# vertices=16 edges=32 label=", 0) == 0);
  const Graph back = read_edge_list(buffer);
  CHECK(back == g);
  CHECK(back.label() == g.label());
}

TEST_CASE("edge list rejects malformed input") {
  std::istringstream loop("# vertices=3 edges=1 label=custom\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), DomainError);
  std::istringstream range("# vertices=3 edges=1 label=custom\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(range), DomainError);
  std::istringstream junk("hello\n");
  CHECK_THROWS_AS(read_edge_list(junk), DomainError);
}

TEST_CASE("graph construction checks") {
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}, GraphLabel::custom()), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}, GraphLabel::custom()), DomainError);
  const Graph path(3, {{0, 1}, {1, 2}}, GraphLabel::custom());
  CHECK(path.min_degree() == 1);
  CHECK(path.is_connected());
  CHECK(path.adjacency_masks() == std::vector<std::uint64_t>{0b010, 0b101, 0b010});
  const Graph split(4, {{0, 1}, {2, 3}}, GraphLabel::custom());
  CHECK_FALSE(split.is_connected());
}

TEST_CASE("labels roundtrip") {
  for (const auto& label : {GraphLabel::hamming(HammingParams(3, 2)),
                            GraphLabel::bc(4, MatchingPolicy::seeded_random, 42),
                            GraphLabel::custom()}) {
    CHECK(GraphLabel::parse(label.to_string()) == label);
  }
}

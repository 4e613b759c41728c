#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "edcrg/constructions.hpp"
#include "edcrg/forbid.hpp"
#include "edcrg/prng.hpp"

using namespace edcrg;

namespace {

Crg all_black_gray_white(SplitMix64& rng, int k, int white_pct) {
  Crg K(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      K.set_edge(i, j, static_cast<int>(rng.next() % 100) < white_pct ? EdgeColor::White
                                                                      : EdgeColor::Gray);
  return K;
}

}  // namespace

TEST_CASE("single-vertex CRGs") {
  Crg white(1);
  white.set_vertex(0, VertexColor::White);
  Crg black(1);
  for (int t = 2; t <= 6; ++t) {
    CHECK(forbids_k2t(white, t));  // K_{2,t} has edges; a lone white vertex takes none
    CHECK(forbids_k2t(black, t));  // ... and non-edges, which a black vertex rejects
  }
}

TEST_CASE("gray clique K(1,1) forbids every K_{2,t}") {
  const Crg K = gen_gray_clique(1, 1);
  for (int t = 2; t <= 7; ++t) CHECK(forbids_k2t(K, t));
}

TEST_CASE("gray clique K(0,m) forbids exactly up to its size") {
  for (int t = 3; t <= 7; ++t) {
    CHECK(forbids_k2t(gen_gray_clique(0, t - 1), t));
    CHECK(!forbids_k2t(gen_gray_clique(0, t), t));
  }
}

TEST_CASE("gray subgraph checks") {
  // Gray K_4: each pair has 2 common gray neighbors, each edge 2 triangles.
  const Crg K4 = gen_gray_clique(0, 4);
  CHECK(gray_k2t_free(K4, 3));
  CHECK(!gray_k2t_free(K4, 2));
  CHECK(gray_book_free(K4, 5));
  CHECK(!gray_book_free(K4, 4));
  CHECK_THROWS_AS(gray_book_free(K4, 2), std::invalid_argument);
}

TEST_CASE("gray subgraph route agrees with the general search") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 3 + static_cast<int>(rng.next() % 4);
    const Crg K = all_black_gray_white(rng, k, 40);
    for (int t = 3; t <= 5; ++t) {
      const bool subgraph_route = gray_k2t_free(K, t) && gray_book_free(K, t);
      CHECK(subgraph_route == forbids_k2t(K, t));
    }
  }
}

TEST_CASE("forbidding is monotone in t") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + static_cast<int>(rng.next() % 4);
    Crg K(k);
    for (int v = 0; v < k; ++v)
      K.set_vertex(v, rng.next() % 2 ? VertexColor::White : VertexColor::Black);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const uint64_t r = rng.next() % 3;
        K.set_edge(i, j, r == 0 ? EdgeColor::Gray : r == 1 ? EdgeColor::White : EdgeColor::Black);
      }
    bool prev = forbids_k2t(K, 2);
    for (int t = 3; t <= 6; ++t) {
      const bool cur = forbids_k2t(K, t);
      if (prev) CHECK(cur);
      prev = cur;
    }
  }
}

TEST_CASE("matching CRG forbids odd-t targets") {
  for (int t = 3; t <= 9; t += 2) {
    const Crg K = gen_matching(t);
    CHECK(K.order() == t + 1);
    CHECK(forbids_k2t(K, t));
  }
}

TEST_CASE("squared-cycle CRG forbids its target") {
  for (int t = 3; t <= 9; ++t) CHECK(forbids_k2t(gen_cycle_power(t + 5, 2), t));
  CHECK(!forbids_k2t(gen_cycle_power(9, 2), 3));  // one vertex too many for t = 3
}

TEST_CASE("generalized quadrangle CRG: forbids t=4, not t=3") {
  const Crg K = gen_triangular_complement(6).first;
  CHECK(forbids_k2t(K, 4));
  CHECK(!forbids_k2t(K, 3));  // an adjacent pair spans a gray book page
}

TEST_CASE("black edges and white vertices route through the general search") {
  // Two black vertices with a black edge: non-edges of K_{2,t} have
  // nowhere to go, so it is forbidden.
  Crg bb(2);
  bb.set_edge(0, 1, EdgeColor::Black);
  CHECK(forbids_k2t(bb, 3));
  // Two white vertices with a black edge: 2-side on one white vertex,
  // t-side on the other, every edge on the black edge.
  Crg ww(2);
  ww.set_vertex(0, VertexColor::White);
  ww.set_vertex(1, VertexColor::White);
  ww.set_edge(0, 1, EdgeColor::Black);
  CHECK(!forbids_k2t(ww, 3));
  // Swapping the edge to white starves the edges of K_{2,t} instead.
  ww.set_edge(0, 1, EdgeColor::White);
  CHECK(forbids_k2t(ww, 3));
}

TEST_CASE("embeds handles explicit targets") {
  // C_4 collapses an edge onto a single black vertex, so two gray-joined
  // black vertices suffice; one black vertex does not (a non-edge would
  // land on it).
  SimpleGraph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  CHECK(!embeds(c4, gen_gray_clique(0, 1)));
  CHECK(embeds(c4, gen_gray_clique(0, 2)));
  // An independent pair maps onto one white vertex but not one black one.
  SimpleGraph pair(2);
  Crg w1(1);
  w1.set_vertex(0, VertexColor::White);
  CHECK(embeds(pair, w1));
  CHECK(!embeds(pair, gen_gray_clique(0, 1)));
}

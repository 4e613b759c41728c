#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "edcrg/constructions.hpp"
#include "edcrg/gsolve.hpp"
#include "edcrg/prng.hpp"

using namespace edcrg;

namespace {

Crg random_crg(SplitMix64& rng, int k) {
  Crg K(k);
  for (int v = 0; v < k; ++v)
    K.set_vertex(v, rng.next() % 2 ? VertexColor::White : VertexColor::Black);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const uint64_t r = rng.next() % 3;
      K.set_edge(i, j, r == 0 ? EdgeColor::Gray : r == 1 ? EdgeColor::White : EdgeColor::Black);
    }
  return K;
}

Rational quad_form(const Crg& K, const Rational& p, const std::vector<Rational>& x) {
  const RationalMatrix M = weighted_matrix(K, p);
  Rational v(0);
  for (int i = 0; i < K.order(); ++i)
    for (int j = 0; j < K.order(); ++j) v += x[i] * M[i][j] * x[j];
  return v;
}

}  // namespace

TEST_CASE("closed forms: gray cliques") {
  for (const Rational& p : {Rational(0), Rational(1, 5), Rational(1, 2), Rational(9, 10)}) {
    // K(1,1): g = p(1-p), weights (1-p, p) on (white, black).
    const GSolution s = g_exact(gen_gray_clique(1, 1), p);
    CHECK(s.g == p * (1 - p));
    // K(0,m): g = (1-p)/m, uniform.
    for (int m = 1; m <= 6; ++m) {
      const GSolution u = g_exact(gen_gray_clique(0, m), p);
      CHECK(u.g == (1 - p) / m);
      if (p < 1) {
        CHECK(u.pcore == PcoreVerdict::Yes);
        for (const Rational& w : u.x) CHECK(w == Rational(1, m));
      }
    }
  }
}

TEST_CASE("optimal x is feasible and achieves g") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng.next() % 5);
    const Crg K = random_crg(rng, k);
    for (const Rational& p : {Rational(3, 10), Rational(1, 2), Rational(7, 10)}) {
      const GSolution s = g_exact(K, p);
      Rational sum(0);
      for (const Rational& w : s.x) {
        CHECK(w >= 0);
        sum += w;
      }
      CHECK(sum == 1);
      CHECK(quad_form(K, p, s.x) == s.g);
      CHECK(s.g <= f_value(K, p));  // uniform weights are feasible
      // No sampled simplex point beats g.
      for (int probe = 0; probe < 20; ++probe) {
        std::vector<Rational> y(k);
        Rational tot(0);
        for (auto& w : y) {
          w = Rational(1 + static_cast<int>(rng.next() % 7));
          tot += w;
        }
        for (auto& w : y) w /= tot;
        CHECK(quad_form(K, p, y) >= s.g);
      }
    }
  }
}

TEST_CASE("g is monotone under taking sub-CRGs") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const Crg K = random_crg(rng, 5);
    const Rational p(2, 5);
    const GSolution whole = g_exact(K, p);
    std::vector<int> keep;
    for (int v = 0; v < 5; ++v)
      if (rng.next() % 2) keep.push_back(v);
    if (keep.empty()) keep.push_back(0);
    CHECK(g_exact(sub_crg(K, keep), p).g >= whole.g);
  }
}

TEST_CASE("white edge between two blacks: g = 1/2 regardless of small p") {
  Crg K(2);
  K.set_edge(0, 1, EdgeColor::White);
  const GSolution s = g_exact(K, Rational(3, 10));
  CHECK(s.g == Rational(1, 2));
  CHECK(s.x == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(s.pcore == PcoreVerdict::Yes);
}

TEST_CASE("an isolated extra vertex breaks p-coreness") {
  // K(0,2) plus a third black vertex joined white to both: the optimum
  // lives on the gray pair only.
  Crg K(3);
  K.set_edge(0, 1, EdgeColor::Gray);
  K.set_edge(0, 2, EdgeColor::White);
  K.set_edge(1, 2, EdgeColor::White);
  const GSolution s = g_exact(K, Rational(2, 5));
  CHECK(s.g == Rational(3, 10));  // (1-p)/2
  CHECK(s.support == std::vector<int>{0, 1});
  CHECK(s.pcore == PcoreVerdict::No);
  CHECK(!is_pcore(K, Rational(2, 5)));
}

TEST_CASE("degenerate stationarity is reported, not misclassified") {
  // Two black vertices with a black edge: M is the all-(1-p) matrix, every
  // simplex point is optimal.
  Crg K(2);
  K.set_edge(0, 1, EdgeColor::Black);
  const Rational p(1, 3);
  const GSolution s = g_exact(K, p);
  CHECK(s.g == 1 - p);
  CHECK(s.pcore == PcoreVerdict::Indeterminate);
  bool saw_degenerate = false;
  for (const Minimizer& m : s.minimizers) saw_degenerate |= m.degenerate;
  CHECK(saw_degenerate);
}

TEST_CASE("p-core edge structure appears in exhaustive small scans") {
  // Every p-core CRG on <= 3 vertices obeys the edge-color law.
  for (const Rational& p : {Rational(3, 10), Rational(7, 10)}) {
    const bool small = p < Rational(1, 2);
    for (int k = 1; k <= 3; ++k) {
      const int pairs = k * (k - 1) / 2;
      int edge_states = 1;
      for (int i = 0; i < pairs; ++i) edge_states *= 3;
      for (int vmask = 0; vmask < (1 << k); ++vmask)
        for (int estate = 0; estate < edge_states; ++estate) {
          Crg K(k);
          for (int v = 0; v < k; ++v)
            K.set_vertex(v, (vmask >> v) & 1 ? VertexColor::White : VertexColor::Black);
          int rem = estate;
          for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
              const int c = rem % 3;
              rem /= 3;
              K.set_edge(i, j, c == 0   ? EdgeColor::Gray
                               : c == 1 ? EdgeColor::White
                                        : EdgeColor::Black);
            }
          if (!is_pcore(K, p)) continue;
          for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
              const EdgeColor c = K.edge(i, j);
              if (c == EdgeColor::Gray) continue;
              if (small) {
                CHECK(c == EdgeColor::White);
                CHECK(K.vertex(i) == VertexColor::Black);
                CHECK(K.vertex(j) == VertexColor::Black);
              } else {
                CHECK(c == EdgeColor::Black);
                CHECK(K.vertex(i) == VertexColor::White);
                CHECK(K.vertex(j) == VertexColor::White);
              }
            }
        }
    }
  }
}

TEST_CASE("gray degree identity on all-black p-cores") {
  const Rational p(3, 10);
  for (const Crg& K :
       {gen_matching(5), gen_cycle_power(8, 2), gen_triangular_complement(6).first}) {
    const GSolution s = g_exact(K, p);
    REQUIRE(s.pcore == PcoreVerdict::Yes);
    const GrayDegreeReport rep = gray_degree_report(K, s);
    REQUIRE(rep.predicted_valid);
    CHECK(rep.equality_expected);
    const Rational xcap = s.g / (1 - p);
    for (int v = 0; v < K.order(); ++v) {
      CHECK(rep.gray_degree[v] == rep.predicted[v]);
      CHECK(s.x[v] <= xcap);
    }
  }
}

TEST_CASE("iterative solver matches the exact one") {
  SplitMix64 rng(7);
  std::vector<Crg> cases = {gen_matching(7), gen_cycle_power(10, 2), gen_paley(13).first,
                            gen_triangular_complement(6).first};
  for (int trial = 0; trial < 10; ++trial) cases.push_back(random_crg(rng, 4 + trial % 3));
  for (const Crg& K : cases) {
    for (const Rational& p : {Rational(1, 4), Rational(3, 5)}) {
      const GSolution exact = g_exact(K, p);
      const GSolution approx = g_iterative(K, p);
      CHECK(approx.approximate);
      CHECK(approx.pcore == PcoreVerdict::Indeterminate);
      CHECK(approx.g >= exact.g);  // certified upper bound
      CHECK(to_double(approx.g - exact.g) < 1e-7);
    }
  }
}

TEST_CASE("generalized quadrangle value at its tangency point") {
  const GSolution s = g_exact(gen_triangular_complement(6).first, Rational(13, 59));
  CHECK(s.g == Rational(10, 59));
  CHECK(s.pcore == PcoreVerdict::Yes);
}

TEST_CASE("threaded and serial exact solves agree") {
  const Crg K = gen_paley(13).first;
  const Rational p(1, 4);
  const GSolution serial = g_exact(K, p, 1);
  const GSolution parallel = g_exact(K, p, 4);
  CHECK(serial.g == parallel.g);
  CHECK(serial.x == parallel.x);
  CHECK(serial.pcore == parallel.pcore);
}

TEST_CASE("large CRGs are rejected by the exact solver") {
  CHECK_THROWS_AS(g_exact(Crg(kGExactLimit + 1), Rational(1, 2)), std::invalid_argument);
}

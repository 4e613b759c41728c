#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "edcrg/crg.hpp"
#include "edcrg/prng.hpp"
#include "edcrg/rational.hpp"
#include "edcrg/simple_graph.hpp"

using namespace edcrg;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/10") == Rational(3, 10));
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational("-2.5e3") == Rational(-2500));
  CHECK(parse_rational("1e-2") == Rational(1, 100));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("+4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("3/2"), std::invalid_argument);
  CHECK(parse_probability("1") == Rational(1));
}

TEST_CASE("rational sqrt and rendering") {
  CHECK(*rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(*rational_sqrt(Rational(0)) == Rational(0));
  CHECK(!rational_sqrt(Rational(2)));
  CHECK(!rational_sqrt(Rational(-1)));
  CHECK(to_fraction_string(Rational(10, 4)) == "5/2");
  CHECK(to_fraction_string(Rational(6, 3)) == "2");
}

TEST_CASE("graph parse and serialize round trip") {
  const std::string text = "graph 4\ne 0 1\ne 2 3\nloop 1\n";
  std::istringstream in(text);
  SimpleGraph g = parse_graph(in);
  CHECK(g.order() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(3, 2));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.has_loop(1));
  CHECK(g.edge_count() == 2);
  CHECK(g.loop_count() == 1);
  CHECK(g.degree(1) == 2);  // edge to 0 plus the loop
  std::istringstream again(serialize_graph(g));
  SimpleGraph h = parse_graph(again);
  CHECK(serialize_graph(h) == serialize_graph(g));
}

TEST_CASE("graph parse errors name the line") {
  std::istringstream bad1("graph 3\ne 0 5\n");
  CHECK_THROWS_WITH_AS(parse_graph(bad1), "graph parse error, line 2: edge endpoint out of range",
                       std::runtime_error);
  std::istringstream bad2("e 0 1\n");
  CHECK_THROWS_AS(parse_graph(bad2), std::runtime_error);
}

TEST_CASE("crg parse, defaults and round trip") {
  const std::string text =
      "crg 3  # three vertices\nv 0 W\nv 1 B\ne 0 1 w\ne 1 2 b\n";
  std::istringstream in(text);
  Crg K = parse_crg(in);
  CHECK(K.order() == 3);
  CHECK(K.vertex(0) == VertexColor::White);
  CHECK(K.vertex(1) == VertexColor::Black);
  CHECK(K.vertex(2) == VertexColor::Black);  // default
  CHECK(K.edge(0, 1) == EdgeColor::White);
  CHECK(K.edge(2, 1) == EdgeColor::Black);
  CHECK(K.edge(0, 2) == EdgeColor::Gray);  // unlisted pairs are gray
  std::istringstream again(serialize_crg(K));
  CHECK(parse_crg(again) == K);
}

TEST_CASE("crg parse errors") {
  std::istringstream dup("crg 2\nv 0 B\nv 0 W\n");
  CHECK_THROWS_WITH_AS(parse_crg(dup), "crg parse error, line 3: duplicate vertex index 0",
                       std::runtime_error);
  std::istringstream conflict("crg 2\ne 0 1 w\ne 1 0 b\n");
  CHECK_THROWS_AS(parse_crg(conflict), std::runtime_error);
  std::istringstream agree("crg 2\ne 0 1 w\ne 1 0 w\n");
  CHECK_NOTHROW(parse_crg(agree));
  std::istringstream badcolor("crg 2\nv 1 X\n");
  CHECK_THROWS_AS(parse_crg(badcolor), std::runtime_error);
  std::istringstream loop("crg 2\ne 1 1 g\n");
  CHECK_THROWS_AS(parse_crg(loop), std::runtime_error);
  std::istringstream range("crg 2\ne 0 2 g\n");
  CHECK_THROWS_AS(parse_crg(range), std::runtime_error);
}

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

}  // namespace

TEST_CASE("f equals the uniform-weight quadratic form") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng.next() % 6);
    const Crg K = random_crg(rng, k);
    for (const Rational& p : {Rational(0), Rational(3, 10), Rational(1, 2), Rational(1)}) {
      const RationalMatrix M = weighted_matrix(K, p);
      Rational quad(0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) quad += M[i][j];
      quad /= Rational(k) * k;
      CHECK(quad == f_value(K, p));
    }
  }
}

TEST_CASE("weighted matrix entries") {
  Crg K(2);
  K.set_vertex(0, VertexColor::White);
  K.set_edge(0, 1, EdgeColor::Black);
  const Rational p(3, 10);
  const RationalMatrix M = weighted_matrix(K, p);
  CHECK(M[0][0] == p);
  CHECK(M[1][1] == 1 - p);
  CHECK(M[0][1] == 1 - p);
  CHECK(M[1][0] == M[0][1]);
}

TEST_CASE("sub-crg preserves colors and composes") {
  SplitMix64 rng(5);
  const Crg K = random_crg(rng, 6);
  const Crg sub = sub_crg(K, {4, 1, 3});
  CHECK(sub.order() == 3);
  CHECK(sub.vertex(0) == K.vertex(4));
  CHECK(sub.edge(0, 1) == K.edge(4, 1));
  CHECK(sub.edge(1, 2) == K.edge(1, 3));
  const Crg nested = sub_crg(sub, {2, 0});
  CHECK(nested.edge(0, 1) == K.edge(3, 4));
  CHECK_THROWS_AS(sub_crg(K, {}), std::invalid_argument);
  CHECK_THROWS_AS(sub_crg(K, {6}), std::out_of_range);
}

TEST_CASE("bipartite double of a looped graph") {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_loop(2);
  const Crg K = bipartite_double(g);
  CHECK(K.order() == 6);
  CHECK(K.all_black_vertices());
  CHECK(K.gray_edges() == 3);  // 0-4, 1-3, 2-5
  CHECK(K.edge(0, 4) == EdgeColor::Gray);
  CHECK(K.edge(1, 3) == EdgeColor::Gray);
  CHECK(K.edge(2, 5) == EdgeColor::Gray);
  CHECK(K.edge(0, 1) == EdgeColor::White);
  CHECK(K.edge(0, 3) == EdgeColor::White);
  CHECK(!K.has_black_edge());
}

TEST_CASE("f of the doubled graph counts whites correctly") {
  SimpleGraph g(2);
  g.add_edge(0, 1);
  const Crg K = bipartite_double(g);  // 4 black vertices, 2 gray edges
  // f = (p*2*EW + (1-p)*k)/k^2 with EW = 4.
  const Rational p(1, 4);
  CHECK(f_value(K, p) == (p * 8 + (1 - p) * 4) / 16);
}

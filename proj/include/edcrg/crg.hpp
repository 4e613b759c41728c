#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "edcrg/rational.hpp"
#include "edcrg/simple_graph.hpp"

namespace edcrg {

enum class VertexColor : uint8_t { Black, White };
enum class EdgeColor : uint8_t { Black, White, Gray };

// Colored regularity graph: a complete graph with black/white vertices
// and black/white/gray edges. Immutable in spirit: constructed once by
// the parsers/generators, then only read. Dense color matrix; orders in
// this project stay in the hundreds.
class Crg {
 public:
  explicit Crg(int k, VertexColor fill = VertexColor::Black);

  int order() const { return k_; }
  VertexColor vertex(int i) const { return vc_[i]; }
  void set_vertex(int i, VertexColor c) { vc_[i] = c; }
  EdgeColor edge(int i, int j) const { return ec_[i * k_ + j]; }
  void set_edge(int i, int j, EdgeColor c);

  int white_vertices() const;
  int black_vertices() const;
  int white_edges() const;
  int black_edges() const;
  int gray_edges() const;

  bool all_black_vertices() const;
  bool has_black_edge() const;

  // Gray subgraph rows as bitsets (for neighborhood intersections).
  std::vector<Bitset> gray_adjacency() const;

  bool operator==(const Crg&) const = default;

 private:
  int k_;
  std::vector<VertexColor> vc_;
  std::vector<EdgeColor> ec_;  // k*k, symmetric, diagonal unused
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// f_K(p) = (1/k^2)[p(|VW|+2|EW|) + (1-p)(|VB|+2|EB|)]
Rational f_value(const Crg& K, const Rational& p);

// Weighted matrix M_K(p): black vertices/edges weigh 1-p, white ones p,
// gray edges 0.
RationalMatrix weighted_matrix(const Crg& K, const Rational& p);

// Induced sub-CRG on a nonempty vertex subset, colors preserved.
Crg sub_crg(const Crg& K, const std::vector<int>& vertices);

// Doubles a graph (loops allowed): 2n black vertices, gray edges
// v_i' v_j'' for every edge v_i v_j (loops give v_i' v_i''), everything
// else white. The gray subgraph is bipartite by construction.
Crg bipartite_double(const SimpleGraph& g);

Crg parse_crg(std::istream& in);
Crg parse_crg_file(const std::string& path);

// Canonical form: vertices by index, only non-gray edges, lexicographic.
std::string serialize_crg(const Crg& K);

}  // namespace edcrg

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace edcrg {

using Bitset = boost::dynamic_bitset<>;

// Plain undirected graph. Loops are supported but must be requested
// explicitly (add_loop); the consumers that accept them say so.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int order() const { return n_; }
  void add_edge(int i, int j);
  void add_loop(int i);
  bool has_edge(int i, int j) const;
  bool has_loop(int i) const { return loops_[i]; }
  int degree(int i) const;  // loop counted once
  int edge_count() const;   // loops excluded
  int loop_count() const;

  // Open neighborhood as a bitset row (loop sets bit i of row i).
  const Bitset& neighbors(int i) const { return adj_[i]; }

 private:
  int n_;
  std::vector<Bitset> adj_;
  Bitset loops_;
};

SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph_file(const std::string& path);
std::string serialize_graph(const SimpleGraph& g);

SimpleGraph complete_bipartite(int a, int b);  // K_{a,b}; a-side first
SimpleGraph complete_graph(int n);

}  // namespace edcrg

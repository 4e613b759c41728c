#include "edcrg/simple_graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edcrg {

SimpleGraph::SimpleGraph(int n) : n_(n), loops_(n) {
  if (n < 1) throw std::invalid_argument("graph order must be positive");
  adj_.assign(n, Bitset(n));
}

void SimpleGraph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("edge endpoint out of range");
  if (i == j) throw std::invalid_argument("self-loop via add_edge; use add_loop");
  adj_[i][j] = true;
  adj_[j][i] = true;
}

void SimpleGraph::add_loop(int i) {
  if (i < 0 || i >= n_) throw std::out_of_range("loop vertex out of range");
  loops_[i] = true;
  adj_[i][i] = true;
}

bool SimpleGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  return adj_[i][j];
}

int SimpleGraph::degree(int i) const { return static_cast<int>(adj_[i].count()); }

int SimpleGraph::edge_count() const {
  int total = 0;
  for (int i = 0; i < n_; ++i) total += degree(i) - (loops_[i] ? 1 : 0);
  return total / 2;
}

int SimpleGraph::loop_count() const { return static_cast<int>(loops_.count()); }

SimpleGraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("graph parse error, line " + std::to_string(lineno) + ": " + msg);
  };

  int n = -1;
  SimpleGraph g(1);
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok != "graph") fail("expected 'graph <n>' header");
      if (!(ls >> n) || n < 1) fail("bad graph order");
      g = SimpleGraph(n);
      have_header = true;
    } else if (tok == "e") {
      int i, j;
      if (!(ls >> i >> j)) fail("expected 'e <i> <j>'");
      if (i < 0 || j < 0 || i >= n || j >= n) fail("edge endpoint out of range");
      if (i == j) fail("self edge; use 'loop'");
      g.add_edge(i, j);
    } else if (tok == "loop") {
      int i;
      if (!(ls >> i)) fail("expected 'loop <i>'");
      if (i < 0 || i >= n) fail("loop vertex out of range");
      g.add_loop(i);
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (!have_header) throw std::runtime_error("graph parse error: missing 'graph <n>' header");
  return g;
}

SimpleGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i)
    if (g.has_loop(i)) out << "loop " << i << "\n";
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) out << "e " << i << " " << j << "\n";
  return out.str();
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace edcrg

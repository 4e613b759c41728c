#include "edcrg/crg.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edcrg {

Crg::Crg(int k, VertexColor fill) : k_(k) {
  if (k < 1) throw std::invalid_argument("CRG order must be at least 1");
  vc_.assign(k, fill);
  ec_.assign(static_cast<size_t>(k) * k, EdgeColor::Gray);
}

void Crg::set_edge(int i, int j, EdgeColor c) {
  if (i == j) throw std::invalid_argument("CRGs have no self-loops");
  ec_[i * k_ + j] = c;
  ec_[j * k_ + i] = c;
}

int Crg::white_vertices() const {
  int n = 0;
  for (auto c : vc_) n += c == VertexColor::White;
  return n;
}

int Crg::black_vertices() const { return k_ - white_vertices(); }

namespace {
int count_edges(const Crg& K, EdgeColor want) {
  int n = 0;
  for (int i = 0; i < K.order(); ++i)
    for (int j = i + 1; j < K.order(); ++j) n += K.edge(i, j) == want;
  return n;
}
}  // namespace

int Crg::white_edges() const { return count_edges(*this, EdgeColor::White); }
int Crg::black_edges() const { return count_edges(*this, EdgeColor::Black); }
int Crg::gray_edges() const { return count_edges(*this, EdgeColor::Gray); }

bool Crg::all_black_vertices() const { return white_vertices() == 0; }

bool Crg::has_black_edge() const {
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j)
      if (edge(i, j) == EdgeColor::Black) return true;
  return false;
}

std::vector<Bitset> Crg::gray_adjacency() const {
  std::vector<Bitset> rows(k_, Bitset(k_));
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j)
      if (edge(i, j) == EdgeColor::Gray) {
        rows[i][j] = true;
        rows[j][i] = true;
      }
  return rows;
}

Rational f_value(const Crg& K, const Rational& p) {
  const Rational k(K.order());
  Rational white = Rational(K.white_vertices() + 2 * K.white_edges());
  Rational black = Rational(K.black_vertices() + 2 * K.black_edges());
  return (p * white + (1 - p) * black) / (k * k);
}

RationalMatrix weighted_matrix(const Crg& K, const Rational& p) {
  const int k = K.order();
  RationalMatrix m(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i)
    m[i][i] = K.vertex(i) == VertexColor::Black ? 1 - p : p;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Rational w(0);
      switch (K.edge(i, j)) {
        case EdgeColor::Black: w = 1 - p; break;
        case EdgeColor::White: w = p; break;
        case EdgeColor::Gray: break;
      }
      m[i][j] = w;
      m[j][i] = w;
    }
  return m;
}

Crg sub_crg(const Crg& K, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("sub_crg: empty vertex subset");
  Crg s(static_cast<int>(vertices.size()));
  for (size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] < 0 || vertices[a] >= K.order())
      throw std::out_of_range("sub_crg: vertex out of range");
    s.set_vertex(static_cast<int>(a), K.vertex(vertices[a]));
    for (size_t b = a + 1; b < vertices.size(); ++b)
      s.set_edge(static_cast<int>(a), static_cast<int>(b), K.edge(vertices[a], vertices[b]));
  }
  return s;
}

Crg bipartite_double(const SimpleGraph& g) {
  const int n = g.order();
  Crg K(2 * n, VertexColor::Black);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) K.set_edge(i, j, EdgeColor::White);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool adjacent = (i == j) ? g.has_loop(i) : g.has_edge(i, j);
      if (adjacent) K.set_edge(i, n + j, EdgeColor::Gray);
    }
  }
  return K;
}

Crg parse_crg(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("crg parse error, line " + std::to_string(lineno) + ": " + msg);
  };

  int k = -1;
  Crg K(1);
  std::vector<bool> vertex_seen, edge_seen;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok != "crg") fail("expected 'crg <k>' header");
      if (!(ls >> k) || k < 1) fail("bad CRG order");
      K = Crg(k);
      vertex_seen.assign(k, false);
      edge_seen.assign(static_cast<size_t>(k) * k, false);
      have_header = true;
    } else if (tok == "v") {
      int i;
      std::string color;
      if (!(ls >> i >> color)) fail("expected 'v <index> <B|W>'");
      if (i < 0 || i >= k) fail("vertex index out of range");
      if (vertex_seen[i]) fail("duplicate vertex index " + std::to_string(i));
      vertex_seen[i] = true;
      if (color == "B")
        K.set_vertex(i, VertexColor::Black);
      else if (color == "W")
        K.set_vertex(i, VertexColor::White);
      else
        fail("bad vertex color token '" + color + "'");
    } else if (tok == "e") {
      int i, j;
      std::string color;
      if (!(ls >> i >> j >> color)) fail("expected 'e <i> <j> <b|w|g>'");
      if (i < 0 || j < 0 || i >= k || j >= k) fail("edge endpoint out of range");
      if (i == j) fail("self-loop edge");
      EdgeColor c;
      if (color == "b")
        c = EdgeColor::Black;
      else if (color == "w")
        c = EdgeColor::White;
      else if (color == "g")
        c = EdgeColor::Gray;
      else {
        fail("bad edge color token '" + color + "'");
        return K;  // unreachable
      }
      size_t idx = static_cast<size_t>(std::min(i, j)) * k + std::max(i, j);
      if (edge_seen[idx] && K.edge(i, j) != c)
        fail("duplicate edge " + std::to_string(i) + " " + std::to_string(j) +
             " with conflicting color");
      edge_seen[idx] = true;
      K.set_edge(i, j, c);
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (!have_header) throw std::runtime_error("crg parse error: missing 'crg <k>' header");
  return K;
}

Crg parse_crg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open crg file: " + path);
  return parse_crg(in);
}

std::string serialize_crg(const Crg& K) {
  std::ostringstream out;
  out << "crg " << K.order() << "\n";
  for (int i = 0; i < K.order(); ++i)
    out << "v " << i << " " << (K.vertex(i) == VertexColor::Black ? "B" : "W") << "\n";
  for (int i = 0; i < K.order(); ++i)
    for (int j = i + 1; j < K.order(); ++j) {
      EdgeColor c = K.edge(i, j);
      if (c == EdgeColor::Gray) continue;
      out << "e " << i << " " << j << " " << (c == EdgeColor::Black ? "b" : "w") << "\n";
    }
  return out.str();
}

}  // namespace edcrg

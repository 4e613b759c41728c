#include "edcrg/constructions.hpp"

#include <stdexcept>

#include "edcrg/forbid.hpp"
#include "edcrg/gf.hpp"

namespace edcrg {

namespace {

[[noreturn]] void srg_fail(const std::string& msg) {
  throw std::runtime_error("srg verification failed: " + msg);
}

}  // namespace

SrgParams verify_srg(const SimpleGraph& g) {
  const int k = g.order();
  if (k < 4) srg_fail("order below 4");
  if (g.loop_count() > 0) srg_fail("loops present");
  SrgParams params;
  params.k = k;
  params.d = g.degree(0);
  int lambda = -1, mu = -1;
  for (int i = 0; i < k; ++i) {
    if (g.degree(i) != params.d)
      srg_fail("vertex " + std::to_string(i) + " has degree " + std::to_string(g.degree(i)) +
               ", expected " + std::to_string(params.d));
    for (int j = i + 1; j < k; ++j) {
      const int common = static_cast<int>((g.neighbors(i) & g.neighbors(j)).count());
      int& slot = g.has_edge(i, j) ? lambda : mu;
      if (slot < 0)
        slot = common;
      else if (slot != common)
        srg_fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                 std::to_string(common) + " common neighbors, expected " + std::to_string(slot));
    }
  }
  if (lambda < 0 && params.d > 0) srg_fail("no adjacent pair");
  if (mu < 0) srg_fail("graph is complete; not strongly regular");
  params.lambda = lambda < 0 ? 0 : lambda;
  params.mu = mu;
  return params;
}

Crg gen_gray_clique(int w, int b) {
  if (w < 0 || b < 0 || w + b < 1) throw std::invalid_argument("K(w,b) needs w+b >= 1");
  Crg K(w + b, VertexColor::Black);
  for (int i = 0; i < w; ++i) K.set_vertex(i, VertexColor::White);
  return K;
}

Crg gen_matching(int t) {
  if (t < 3 || t % 2 == 0) throw std::invalid_argument("matching CRG needs odd t >= 3");
  Crg K(t + 1, VertexColor::Black);
  for (int i = 0; i < (t + 1) / 2; ++i) K.set_edge(2 * i, 2 * i + 1, EdgeColor::White);
  return K;
}

Crg gen_cycle_power(int k, int r) {
  if (r < 1 || k < 2 * r + 2)
    throw std::invalid_argument("cycle power CRG needs r >= 1 and k >= 2r+2");
  Crg K(k, VertexColor::Black);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int dist = std::min(j - i, k - (j - i));
      if (dist <= r) K.set_edge(i, j, EdgeColor::White);
    }
  return K;
}

namespace {

Crg srg_crg(const SimpleGraph& g) {
  Crg K(g.order(), VertexColor::Black);
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      K.set_edge(i, j, g.has_edge(i, j) ? EdgeColor::Gray : EdgeColor::White);
  return K;
}

std::pair<Crg, SrgParams> finish_srg(const SimpleGraph& g) {
  SrgParams params = verify_srg(g);
  return {srg_crg(g), params};
}

}  // namespace

std::pair<Crg, SrgParams> gen_paley(int q) {
  if (q % 4 != 1) throw std::invalid_argument("paley graph needs q = 1 mod 4");
  Field f(q);
  SimpleGraph g(q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (f.is_square(f.sub(i, j))) g.add_edge(i, j);
  return finish_srg(g);
}

std::pair<Crg, SrgParams> gen_triangular_complement(int m) {
  if (m < 4) throw std::invalid_argument("triangular complement needs m >= 4");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  SimpleGraph g(static_cast<int>(pairs.size()));
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      const auto& [i, j] = pairs[a];
      const auto& [x, y] = pairs[b];
      if (i != x && i != y && j != x && j != y) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return finish_srg(g);
}

std::pair<Crg, SrgParams> gen_rook_complement(int m) {
  if (m < 3) throw std::invalid_argument("rook complement needs m >= 3");
  SimpleGraph g(m * m);
  for (int a = 0; a < m * m; ++a)
    for (int b = a + 1; b < m * m; ++b)
      if (a / m != b / m && a % m != b % m) g.add_edge(a, b);
  return finish_srg(g);
}

std::pair<Crg, SrgParams> gen_petersen_complement() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  SimpleGraph g(10);
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      const auto& [i, j] = pairs[a];
      const auto& [x, y] = pairs[b];
      if (i == x || i == y || j == x || j == y) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return finish_srg(g);
}

std::pair<Crg, SrgParams> gen_srg_file(const std::string& path, const SrgParams& declared) {
  SimpleGraph g = parse_graph_file(path);
  SrgParams params = verify_srg(g);
  if (!(params == declared))
    srg_fail("file graph is a (" + std::to_string(params.k) + "," + std::to_string(params.d) + "," +
             std::to_string(params.lambda) + "," + std::to_string(params.mu) +
             ") SRG, not the declared one");
  return {srg_crg(g), params};
}

SimpleGraph furedi_graph(int q, int t) {
  if (t < 3) throw std::invalid_argument("furedi construction needs t >= 3");
  if ((q - 1) % (t - 1) != 0)
    throw std::invalid_argument("furedi construction needs t-1 | q-1");
  Field f(q);
  const std::vector<int> H = f.subgroup_of_order(t - 1);
  std::vector<bool> in_h(q, false);
  for (int h : H) in_h[h] = true;

  // Orbits of GF(q)^2 \ {0} under coordinatewise multiplication by H;
  // representatives are the lexicographically least pairs.
  const int n = (q * q - 1) / (t - 1);
  std::vector<int> orbit(static_cast<size_t>(q) * q, -1);
  std::vector<std::pair<int, int>> rep;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if ((a == 0 && b == 0) || orbit[static_cast<size_t>(a) * q + b] >= 0) continue;
      const int id = static_cast<int>(rep.size());
      rep.emplace_back(a, b);
      for (int h : H) orbit[static_cast<size_t>(f.mul(h, a)) * q + f.mul(h, b)] = id;
    }
  if (static_cast<int>(rep.size()) != n)
    throw std::logic_error("furedi orbit count mismatch");

  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    const auto& [a, b] = rep[i];
    for (int j = i; j < n; ++j) {
      const auto& [x, y] = rep[j];
      if (in_h[f.add(f.mul(a, x), f.mul(b, y))]) {
        if (i == j)
          g.add_loop(i);
        else
          g.add_edge(i, j);
      }
    }
  }
  return g;
}

Crg gen_furedi(int q, int t) {
  const SimpleGraph g = furedi_graph(q, t);
  const int n = g.order();
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("furedi construction integrity (q=" + std::to_string(q) +
                             ", t=" + std::to_string(t) + "): " + msg);
  };
  for (int i = 0; i < n; ++i)
    if (g.degree(i) != q)
      fail("vertex " + std::to_string(i) + " has degree " + std::to_string(g.degree(i)) +
           ", expected " + std::to_string(q));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>((g.neighbors(i) & g.neighbors(j)).count()) > t - 1)
        fail("pair with more than t-1 common neighbors");
  Crg K = bipartite_double(g);
  if (!forbids_k2t(K, t)) fail("doubled CRG does not forbid K_{2,t}");
  const Rational den(2 * (q * q - 1));
  const Rational e0 = Rational(t - 1) / den;
  const Rational e1 = Rational(2 * q * q - q * (t - 1) - 2 * t) / den;
  if (f_value(K, 0) != e0 || f_value(K, 1) != e0 + e1) fail("f line deviates from the closed form");
  return K;
}

const std::vector<ChartRow>& srg_chart() {
  static const std::vector<ChartRow> rows = {
      {{15, 6, 1, 3}, 4, "triangular_complement(6)"},
      {{13, 6, 2, 3}, 5, "paley(13)"},
      {{40, 12, 2, 4}, 5, nullptr},
      {{96, 19, 2, 4}, 5, nullptr},
      {{10, 6, 3, 4}, 6, "petersen_complement"},
      {{17, 8, 3, 4}, 6, "paley(17)"},
      {{26, 10, 3, 4}, 6, nullptr},
      {{85, 20, 3, 5}, 6, nullptr},
      {{16, 9, 4, 6}, 7, "rook_complement(4)"},
      {{36, 14, 4, 6}, 7, nullptr},
      {{49, 16, 3, 6}, 7, nullptr},
      {{64, 18, 2, 6}, 7, nullptr},
      {{100, 22, 0, 6}, 7, nullptr},
      {{156, 30, 4, 6}, 7, nullptr},
      {{25, 12, 5, 6}, 8, "paley(25)"},
      {{76, 21, 2, 7}, 8, nullptr},
      {{125, 28, 3, 7}, 8, nullptr},
  };
  return rows;
}

namespace {

RegistryEntry make_entry(std::string name, Crg crg, bool g_is_p1mp = false) {
  RegistryEntry e{std::move(name), std::move(crg), 0, 0, g_is_p1mp};
  e.f0 = f_value(e.crg, 0);
  e.f1 = f_value(e.crg, 1) - e.f0;
  return e;
}

Crg build_builtin_srg(const std::string& name) {
  if (name == "triangular_complement(6)") return gen_triangular_complement(6).first;
  if (name == "paley(13)") return gen_paley(13).first;
  if (name == "petersen_complement") return gen_petersen_complement().first;
  if (name == "paley(17)") return gen_paley(17).first;
  if (name == "rook_complement(4)") return gen_rook_complement(4).first;
  if (name == "paley(25)") return gen_paley(25).first;
  throw std::logic_error("unknown builtin srg: " + name);
}

}  // namespace

std::vector<RegistryEntry> construction_registry(int t) {
  if (t < 3) throw std::invalid_argument("registry needs t >= 3");
  std::vector<RegistryEntry> out;
  out.push_back(make_entry("K(1,1)", gen_gray_clique(1, 1), true));
  out.push_back(make_entry("K(0," + std::to_string(t - 1) + ")", gen_gray_clique(0, t - 1)));
  if (t % 2 == 1) out.push_back(make_entry("matching(" + std::to_string(t) + ")", gen_matching(t)));
  out.push_back(make_entry("cycle_power(" + std::to_string(t + 5) + ",2)", gen_cycle_power(t + 5, 2)));
  for (const ChartRow& row : srg_chart()) {
    if (!row.builtin) continue;
    if (row.params.lambda > t - 3 || row.params.mu > t - 1) continue;
    out.push_back(make_entry(row.builtin, build_builtin_srg(row.builtin)));
  }
  return out;
}

}  // namespace edcrg

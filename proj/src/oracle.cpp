#include "edcrg/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edcrg/forbid.hpp"
#include "edcrg/gsolve.hpp"

namespace edcrg {

namespace {

// Is there an independent set of size `want` inside `candidates`?
bool has_independent_set(const SimpleGraph& g, Bitset candidates, int want) {
  if (want <= 0) return true;
  if (static_cast<int>(candidates.count()) < want) return false;
  const auto v = candidates.find_first();
  Bitset without = candidates;
  without[v] = false;
  // Take v: drop v's neighbors from the pool.
  Bitset taken = without & ~g.neighbors(v);
  if (has_independent_set(g, taken, want - 1)) return true;
  // Skip v.
  return has_independent_set(g, without, want);
}

// Vertices of one induced K_{2,t} copy, or empty if none.
std::vector<int> find_induced_k2t(const SimpleGraph& g, int t) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      Bitset common = g.neighbors(u) & g.neighbors(v);
      common[u] = false;
      common[v] = false;
      if (static_cast<int>(common.count()) < t) continue;
      // Extract an independent t-set from the common neighborhood.
      std::vector<int> chosen;
      std::vector<int> pool;
      for (auto w = common.find_first(); w != Bitset::npos; w = common.find_next(w))
        pool.push_back(static_cast<int>(w));
      // Depth-first over the pool.
      std::vector<std::pair<size_t, std::vector<int>>> stack{{0, {}}};
      while (!stack.empty()) {
        auto [idx, cur] = stack.back();
        stack.pop_back();
        if (static_cast<int>(cur.size()) == t) {
          chosen = cur;
          break;
        }
        if (idx >= pool.size()) continue;
        if (static_cast<int>(cur.size() + (pool.size() - idx)) < t) continue;
        stack.push_back({idx + 1, cur});
        bool ok = true;
        for (int c : cur)
          if (g.has_edge(c, pool[idx])) {
            ok = false;
            break;
          }
        if (ok) {
          cur.push_back(pool[idx]);
          stack.push_back({idx + 1, cur});
        }
      }
      if (static_cast<int>(chosen.size()) == t) {
        chosen.push_back(u);
        chosen.push_back(v);
        return chosen;
      }
    }
  return {};
}

}  // namespace

bool induced_k2t_free(const SimpleGraph& g, int t) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      Bitset common = g.neighbors(u) & g.neighbors(v);
      common[u] = false;
      common[v] = false;
      if (has_independent_set(g, common, t)) return false;
    }
  return true;
}

namespace {

// Mutable adjacency-matrix view used by the edit search.
struct EditGraph {
  int n;
  std::vector<Bitset> adj;

  explicit EditGraph(const SimpleGraph& g) : n(g.order()), adj(g.order()) {
    for (int i = 0; i < n; ++i) {
      adj[i] = g.neighbors(i);
      adj[i][i] = false;  // the edit problem ignores loops
    }
  }

  void flip(int i, int j) {
    adj[i][j].flip();
    adj[j][i].flip();
  }

  SimpleGraph to_graph() const {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj[i][j]) g.add_edge(i, j);
    return g;
  }

};

// Branch on the pairs inside one forbidden copy: any edit set destroying
// the copy toggles at least one of them. Records the edits of a
// successful branch and leaves g in the edited state.
bool edit_search(EditGraph& g, int t, int depth, std::vector<Bitset>& blocked,
                 std::vector<std::pair<int, int>>& edits) {
  const std::vector<int> copy = find_induced_k2t(g.to_graph(), t);
  if (copy.empty()) return true;
  if (depth == 0) return false;
  for (size_t a = 0; a < copy.size(); ++a)
    for (size_t b = a + 1; b < copy.size(); ++b) {
      const int i = std::min(copy[a], copy[b]), j = std::max(copy[a], copy[b]);
      if (blocked[i][j]) continue;
      g.flip(i, j);
      blocked[i][j] = true;
      edits.emplace_back(i, j);
      if (edit_search(g, t, depth - 1, blocked, edits)) return true;
      edits.pop_back();
      blocked[i][j] = false;
      g.flip(i, j);
    }
  return false;
}

}  // namespace

EditResult brute_edit_distance(const SimpleGraph& g, int t, int budget) {
  if (g.order() > 10) throw std::invalid_argument("brute_edit_distance: n <= 10 required");
  if (t < 2) throw std::invalid_argument("brute_edit_distance: t >= 2 required");
  EditResult out;
  for (int d = 0; d <= budget; ++d) {
    EditGraph work(g);
    std::vector<Bitset> blocked(g.order(), Bitset(g.order()));
    std::vector<std::pair<int, int>> edits;
    if (edit_search(work, t, d, blocked, edits)) {
      out.distance = static_cast<int>(edits.size());
      out.witness = work.to_graph();
      return out;
    }
  }
  out.distance = budget;
  out.is_lower_bound = true;
  return out;
}

SimpleGraph sample_gnp(int n, double p, SplitMix64& rng) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) g.add_edge(i, j);
  return g;
}

std::vector<double> sample_gnp_distance(int n, double p, int t, int trials, uint64_t seed) {
  if (n > 10) throw std::invalid_argument("sample_gnp_distance: n <= 10 required");
  SplitMix64 rng(seed);
  std::vector<double> out;
  const double pairs = n * (n - 1) / 2.0;
  for (int i = 0; i < trials; ++i) {
    const SimpleGraph g = sample_gnp(n, p, rng);
    out.push_back(brute_edit_distance(g, t).distance / pairs);
  }
  return out;
}

namespace {

void grid_g_rec(const std::vector<std::vector<double>>& m, int v, int remaining, double partial,
                std::vector<int>& counts, double scale, double& best) {
  const int k = static_cast<int>(m.size());
  // All matrix entries are nonnegative, so the partial sum already lower
  // bounds the final value; prune against the incumbent.
  if (partial * scale >= best) return;
  if (v == k - 1) {
    double add = static_cast<double>(remaining) * remaining * m[v][v];
    for (int u = 0; u < v; ++u) add += 2.0 * remaining * counts[u] * m[u][v];
    best = std::min(best, (partial + add) * scale);
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    double add = static_cast<double>(c) * c * m[v][v];
    for (int u = 0; u < v; ++u) add += 2.0 * c * counts[u] * m[u][v];
    counts[v] = c;
    grid_g_rec(m, v + 1, remaining - c, partial + add, counts, scale, best);
  }
  counts[v] = 0;
}

}  // namespace

double grid_g(const Crg& K, const Rational& p, int resolution) {
  const int k = K.order();
  if (k > 6) throw std::invalid_argument("grid_g: k <= 6 required");
  if (resolution < 1) throw std::invalid_argument("grid_g: resolution >= 1 required");
  const RationalMatrix M = weighted_matrix(K, p);
  std::vector<std::vector<double>> m(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = to_double(M[i][j]);
  std::vector<int> counts(k, 0);
  double best = 2.0;  // objective never exceeds max entry <= 1
  grid_g_rec(m, 0, resolution, 0.0, counts, 1.0 / (static_cast<double>(resolution) * resolution),
             best);
  return best;
}

namespace {

std::string canonical_key(const Crg& K) {
  const int k = K.order();
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  std::string best;
  do {
    std::string key;
    key.reserve(k + k * k);
    for (int i = 0; i < k; ++i) key.push_back(K.vertex(perm[i]) == VertexColor::Black ? 'B' : 'W');
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        switch (K.edge(perm[i], perm[j])) {
          case EdgeColor::Black: key.push_back('b'); break;
          case EdgeColor::White: key.push_back('w'); break;
          case EdgeColor::Gray: key.push_back('g'); break;
        }
      }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool structure_ok(const Crg& K, const Rational& p) {
  if (p == Rational(1, 2)) return true;
  const bool small = p < Rational(1, 2);
  for (int i = 0; i < K.order(); ++i)
    for (int j = i + 1; j < K.order(); ++j) {
      const EdgeColor c = K.edge(i, j);
      if (c == EdgeColor::Gray) continue;
      if (small) {
        if (c != EdgeColor::White || K.vertex(i) != VertexColor::Black ||
            K.vertex(j) != VertexColor::Black)
          return false;
      } else {
        if (c != EdgeColor::Black || K.vertex(i) != VertexColor::White ||
            K.vertex(j) != VertexColor::White)
          return false;
      }
    }
  return true;
}

}  // namespace

ScanReport scan_small_pcores(int max_k, const Rational& p, int t) {
  if (max_k < 1 || max_k > 4) throw std::invalid_argument("scan_small_pcores: 1 <= max_k <= 4");
  ScanReport report;
  std::set<std::string> seen;
  for (int k = 1; k <= max_k; ++k) {
    const int pairs = k * (k - 1) / 2;
    long long edge_states = 1;
    for (int i = 0; i < pairs; ++i) edge_states *= 3;
    for (int vmask = 0; vmask < (1 << k); ++vmask) {
      for (long long estate = 0; estate < edge_states; ++estate) {
        Crg K(k);
        for (int v = 0; v < k; ++v)
          K.set_vertex(v, (vmask >> v) & 1 ? VertexColor::White : VertexColor::Black);
        long long rem = estate;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) {
            const int c = static_cast<int>(rem % 3);
            rem /= 3;
            K.set_edge(i, j, c == 0 ? EdgeColor::Gray
                                    : c == 1 ? EdgeColor::White : EdgeColor::Black);
          }
        if (!seen.insert(canonical_key(K)).second) continue;
        ++report.crgs_scanned;
        if (!forbids_k2t(K, t)) continue;
        ++report.forbidding;
        const GSolution sol = g_exact(K, p);
        if (sol.pcore != PcoreVerdict::Yes) continue;
        ++report.pcores;
        if (!structure_ok(K, p)) ++report.structure_violations;
        if (!report.have_min || sol.g < report.min_g) {
          report.have_min = true;
          report.min_g = sol.g;
          report.best = K;
        }
      }
    }
  }
  return report;
}

}  // namespace edcrg

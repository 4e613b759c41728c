#include "edcrg/forbid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edcrg {

namespace {

// May H-vertices u,v (with their adjacency) map to K-vertices a,b?
bool pair_ok(const SimpleGraph& H, const Crg& K, int u, int v, int a, int b) {
  if (H.has_edge(u, v)) {
    if (a == b) return K.vertex(a) == VertexColor::Black;
    return K.edge(a, b) != EdgeColor::White;
  }
  if (a == b) return K.vertex(a) == VertexColor::White;
  return K.edge(a, b) != EdgeColor::Black;
}

struct Searcher {
  const SimpleGraph& H;
  const Crg& K;
  std::vector<int> order;              // H vertices, descending degree
  std::vector<int> assignment;         // order position -> K vertex
  std::vector<std::vector<Bitset>> domains;  // domains[depth][pos]

  bool solve(int depth) {
    const int n = H.order();
    if (depth == n) return true;
    const int u = order[depth];
    const Bitset& dom = domains[depth][depth];
    for (auto a = dom.find_first(); a != Bitset::npos; a = dom.find_next(a)) {
      assignment[depth] = static_cast<int>(a);
      bool dead = false;
      for (int later = depth + 1; later < n && !dead; ++later) {
        Bitset pruned = domains[depth][later];
        const int v = order[later];
        for (auto b = pruned.find_first(); b != Bitset::npos; b = pruned.find_next(b))
          if (!pair_ok(H, K, u, v, static_cast<int>(a), static_cast<int>(b)))
            pruned[b] = false;
        if (pruned.none()) dead = true;
        domains[depth + 1][later] = pruned;
      }
      if (!dead && solve(depth + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool embeds(const SimpleGraph& H, const Crg& K) {
  const int n = H.order();
  Searcher s{H, K, {}, {}, {}};
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return H.degree(a) > H.degree(b); });
  s.assignment.assign(n, -1);
  s.domains.assign(n + 1, std::vector<Bitset>(n, Bitset(K.order())));
  for (int pos = 0; pos < n; ++pos) s.domains[0][pos].set();
  return s.solve(0);
}

bool gray_k2t_free(const Crg& K, int t) {
  const auto gray = K.gray_adjacency();
  for (int i = 0; i < K.order(); ++i)
    for (int j = i + 1; j < K.order(); ++j)
      if (static_cast<int>((gray[i] & gray[j]).count()) >= t) return false;
  return true;
}

bool gray_book_free(const Crg& K, int t) {
  if (t < 3) throw std::invalid_argument("gray_book_free requires t >= 3");
  const auto gray = K.gray_adjacency();
  for (int i = 0; i < K.order(); ++i)
    for (int j = i + 1; j < K.order(); ++j)
      if (K.edge(i, j) == EdgeColor::Gray &&
          static_cast<int>((gray[i] & gray[j]).count()) >= t - 2)
        return false;
  return true;
}

bool forbids_k2t(const Crg& K, int t) {
  if (t >= 3 && K.all_black_vertices() && !K.has_black_edge())
    return gray_k2t_free(K, t) && gray_book_free(K, t);
  return !embeds(complete_bipartite(2, t), K);
}

}  // namespace edcrg

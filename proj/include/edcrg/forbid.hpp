#pragma once

#include "edcrg/crg.hpp"
#include "edcrg/simple_graph.hpp"

namespace edcrg {

// Colored homomorphism test: is there a map V(H) -> V(K) where every
// edge of H lands on a black/gray edge (or a shared black vertex) and
// every non-edge lands on a white/gray edge (or a shared white vertex)?
// Backtracking with forward checking; callers keep |H| small.
bool embeds(const SimpleGraph& H, const Crg& K);

// True iff no pair of distinct vertices has >= t common gray neighbors
// (a gray K_{2,t} subgraph).
bool gray_k2t_free(const Crg& K, int t);

// True iff no gray edge has >= t-2 common gray neighbors (a gray book
// B_{t-2}: t-2 triangles sharing one edge). Requires t >= 3.
bool gray_book_free(const Crg& K, int t);

// Does K forbid K_{2,t} embedding? For all-black CRGs with only white
// and gray edges this is the pair of subgraph checks above; otherwise
// it falls back to the general homomorphism search. t = 2 always takes
// the general route.
bool forbids_k2t(const Crg& K, int t);

}  // namespace edcrg

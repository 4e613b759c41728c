#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edcrg/crg.hpp"
#include "edcrg/simple_graph.hpp"

namespace edcrg {

struct SrgParams {
  int k = 0, d = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

// Degree/common-neighbor verification; throws with a description if the
// graph is not strongly regular. Loops are not allowed here.
SrgParams verify_srg(const SimpleGraph& g);

// K(w,b): w white and b black vertices, all edges gray.
Crg gen_gray_clique(int w, int b);

// Odd t: t+1 black vertices, white perfect matching, rest gray. f = 1/(t+1).
Crg gen_matching(int t);

// All-black CRG whose white edges are the r-th power of the k-cycle and
// gray edges its complement. f = ((2r-1)p + 1)/k. Requires k >= 2r+2.
Crg gen_cycle_power(int k, int r);

// SRG-backed CRGs: all black vertices, gray on SRG edges, white on
// non-edges. Each generator re-verifies the parameters it claims.
std::pair<Crg, SrgParams> gen_paley(int q);                  // q = 1 mod 4 prime power
std::pair<Crg, SrgParams> gen_triangular_complement(int m);  // complement of L(K_m), m >= 4
std::pair<Crg, SrgParams> gen_rook_complement(int m);        // complement of the m x m rook graph
std::pair<Crg, SrgParams> gen_petersen_complement();         // (10,6,3,4)
std::pair<Crg, SrgParams> gen_srg_file(const std::string& path, const SrgParams& declared);

// The Zarankiewicz-style K_{2,t}-free graph over GF(q), loops retained:
// vertices are orbits of GF(q)^2 minus the origin under the order-(t-1)
// multiplicative subgroup H, with <(a,b)> adjacent to <(x,y)> iff
// ax+by is in H. q-regular on (q^2-1)/(t-1) vertices. Requires t-1 | q-1.
SimpleGraph furedi_graph(int q, int t);

// bipartite_double of furedi_graph, with mandatory integrity checks:
// q-regularity, <= t-1 common neighbors (loop-inclusive), forbids_k2t,
// and f matching (t-1+p(2q^2-q(t-1)-2t))/(2(q^2-1)). Throws if any fails.
Crg gen_furedi(int q, int t);

struct ChartRow {
  SrgParams params;
  int min_t;             // smallest t for which the row is eligible
  const char* builtin;   // generator name, or nullptr if file-only
};
// The catalog of SRG parameter sets whose lines improve some upper bound
// for 5 <= t <= 8, plus the (15,6,1,3) generalized quadrangle for t = 4.
const std::vector<ChartRow>& srg_chart();

struct RegistryEntry {
  std::string name;
  Crg crg;
  Rational f0, f1;         // f(p) = f0 + f1*p
  bool g_is_p1mp = false;  // K(1,1): g = p(1-p) beats the f line
};

// Every built-in construction forbidding K_{2,t}: gray cliques, the odd-t
// matching, the cycle-power CRG, and eligible built-in SRGs.
std::vector<RegistryEntry> construction_registry(int t);

}  // namespace edcrg

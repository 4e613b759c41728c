#pragma once

#include <cstdint>
#include <vector>

#include "edcrg/crg.hpp"
#include "edcrg/prng.hpp"
#include "edcrg/simple_graph.hpp"

namespace edcrg {

// No induced K_{2,t}: no nonadjacent pair whose common neighborhood
// contains an independent set of size t.
bool induced_k2t_free(const SimpleGraph& g, int t);

struct EditResult {
  int distance = 0;
  bool is_lower_bound = false;  // budget exhausted: true distance > budget
  SimpleGraph witness{1};       // edited graph in the property (when found)
};

// Exact minimum number of edge toggles bringing g into the induced-
// K_{2,t}-free property, by iterative deepening over forbidden-copy
// branching. n <= 10.
EditResult brute_edit_distance(const SimpleGraph& g, int t, int budget = 32);

// Seeded G(n,p) samples; returns dist/C(n,2) per trial.
std::vector<double> sample_gnp_distance(int n, double p, int t, int trials, uint64_t seed);
SimpleGraph sample_gnp(int n, double p, SplitMix64& rng);

// Min of u^T M u over weight vectors with entries c_i/resolution summing
// to 1 (an upper bound on g, converging as resolution grows). k <= 6.
double grid_g(const Crg& K, const Rational& p, int resolution);

struct ScanReport {
  int crgs_scanned = 0;  // distinct up to color-preserving isomorphism
  int forbidding = 0;
  int pcores = 0;  // p-cores among the forbidding CRGs
  int structure_violations = 0;
  bool have_min = false;
  Rational min_g;
  Crg best{1};  // a forbidding p-core achieving min_g
};

// Exhaustive scan of all CRGs with at most max_k (<= 4) vertices:
// filters by forbids_k2t, solves each exactly, and checks the p-core
// edge-structure law (p < 1/2: non-gray edges are white between black
// vertices; p > 1/2: black between white vertices).
ScanReport scan_small_pcores(int max_k, const Rational& p, int t);

}  // namespace edcrg

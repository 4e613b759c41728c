#pragma once

#include <cstdint>
#include <vector>

#include "edcrg/crg.hpp"

namespace edcrg {

enum class PcoreVerdict : uint8_t { Yes, No, Indeterminate };

struct Minimizer {
  std::vector<int> support;   // vertices with positive weight
  std::vector<Rational> x;    // full-length weight vector
  bool degenerate = false;    // stationarity system had a solution polytope
};

struct GSolution {
  Rational g;                 // min of x^T M_K(p) x over the simplex
  std::vector<Rational> x;    // an optimal weight vector, length k
  std::vector<int> support;   // support of x
  Rational p;
  PcoreVerdict pcore = PcoreVerdict::No;
  bool approximate = false;   // true for g_iterative results
  bool converged = true;
  std::vector<Minimizer> minimizers;  // every minimizing support found
};

// Exact global minimum of the simplex quadratic by support enumeration:
// for each nonempty support S solve M_S x = nu*1, sum x = 1 exactly and
// keep feasible stationary points. k is capped (default 20); larger CRGs
// must use g_iterative. threads = 0 means hardware concurrency.
GSolution g_exact(const Crg& K, const Rational& p, int threads = 0);

constexpr int kGExactLimit = 20;

// Projected gradient descent fallback for large CRGs: uniform start plus
// `restarts` random starts. Never claims p-coreness.
GSolution g_iterative(const Crg& K, const Rational& p, int restarts = 8,
                      double tol = 1e-9, uint64_t seed = 1);

// True iff the optimal weighting is unique, non-degenerate and positive
// on every vertex.
bool is_pcore(const Crg& K, const Rational& p);

struct GrayDegreeReport {
  std::vector<Rational> gray_degree;  // d_G(v) = sum of gray-neighbor weights
  std::vector<Rational> predicted;    // (p-g)/p + ((1-2p)/p) x(v)
  bool predicted_valid = false;       // false at p = 0 (formula divides by p)
  bool equality_expected = false;     // all-black p-core with p > 0
};

GrayDegreeReport gray_degree_report(const Crg& K, const GSolution& sol);

}  // namespace edcrg

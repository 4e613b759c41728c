#include "edcrg/gsolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "edcrg/prng.hpp"

namespace edcrg {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form. Returns the pivot column of each
// pivot row, in order.
std::vector<int> rref(Mat& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    const Rational inv = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

enum class SolveKind { Unique, Degenerate, Inconsistent };

struct Stationary {
  SolveKind kind = SolveKind::Inconsistent;
  Vec x;        // length s, weights on the support
  Rational nu;  // the stationary objective value
};

// Solve M_S x = nu*1, sum x = 1 for the principal submatrix of M on
// `support`. Degenerate systems get a relative-interior representative:
// the projection of the uniform vector onto the affine solution set.
Stationary solve_stationarity(const RationalMatrix& M, const std::vector<int>& support) {
  const int s = static_cast<int>(support.size());
  // Unknowns: x_0..x_{s-1}, nu. Rows: stationarity per vertex, then sum.
  Mat a(s + 1, Vec(s + 2, Rational(0)));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) a[i][j] = M[support[i]][support[j]];
    a[i][s] = Rational(-1);
  }
  for (int j = 0; j < s; ++j) a[s][j] = Rational(1);
  a[s][s + 1] = Rational(1);

  const std::vector<int> pivots = rref(a);
  Stationary out;
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == s + 1) return out;  // 0 = 1 row: inconsistent

  std::vector<int> pivot_of_col(s + 1, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);

  if (static_cast<int>(pivots.size()) == s + 1) {
    out.kind = SolveKind::Unique;
    out.x.assign(s, Rational(0));
    for (int j = 0; j < s; ++j) out.x[j] = a[pivot_of_col[j]][s + 1];
    out.nu = a[pivot_of_col[s]][s + 1];
    return out;
  }

  // Underdetermined but consistent. nu is always determined: any two
  // solutions (x,nu), (x',nu') give (x-x')^T M (x-x') = 0 and
  // x^T M x' = nu' = nu by symmetry.
  if (pivot_of_col[s] < 0) throw std::logic_error("stationarity: nu unexpectedly free");

  // Particular solution with free variables at zero.
  Vec x0(s, Rational(0));
  for (int j = 0; j < s; ++j)
    if (pivot_of_col[j] >= 0) x0[j] = a[pivot_of_col[j]][s + 1];
  out.nu = a[pivot_of_col[s]][s + 1];

  // Null-space basis restricted to the x-coordinates.
  std::vector<Vec> null_basis;
  for (int f = 0; f < s; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    Vec v(s, Rational(0));
    v[f] = Rational(1);
    for (int j = 0; j < s; ++j)
      if (pivot_of_col[j] >= 0) v[j] = -a[pivot_of_col[j]][f];
    if (a[pivot_of_col[s]][f] != 0)
      throw std::logic_error("stationarity: nu varies along the null space");
    null_basis.push_back(std::move(v));
  }

  // Project the uniform vector onto x0 + span(null_basis).
  const int m = static_cast<int>(null_basis.size());
  Mat gram(m, Vec(m + 1, Rational(0)));
  const Rational uniform(1, s);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      for (int c = 0; c < s; ++c) gram[i][j] += null_basis[i][c] * null_basis[j][c];
    for (int c = 0; c < s; ++c) gram[i][m] += null_basis[i][c] * (uniform - x0[c]);
  }
  rref(gram);
  out.x = x0;
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < s; ++c) out.x[c] += gram[i][m] * null_basis[i][c];
  out.kind = SolveKind::Degenerate;
  return out;
}

struct Best {
  bool any = false;
  Rational g;
  std::vector<std::pair<uint32_t, Minimizer>> minimizers;  // keyed by mask
};

void consider(Best& best, uint32_t mask, const Rational& nu, Minimizer&& m) {
  if (!best.any || nu < best.g) {
    best.any = true;
    best.g = nu;
    best.minimizers.clear();
  } else if (nu != best.g) {
    return;
  }
  best.minimizers.emplace_back(mask, std::move(m));
}

void scan_masks(const RationalMatrix& M, int k, uint32_t lo, uint32_t hi, Best& best) {
  std::vector<int> support;
  for (uint32_t mask = lo; mask < hi; ++mask) {
    support.clear();
    for (int v = 0; v < k; ++v)
      if (mask & (1u << v)) support.push_back(v);
    if (support.empty()) continue;
    Stationary st = solve_stationarity(M, support);
    if (st.kind == SolveKind::Inconsistent) continue;
    bool feasible = true;
    for (const Rational& xi : st.x) {
      if (st.kind == SolveKind::Unique ? xi <= 0 : xi < 0) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    Minimizer m;
    m.degenerate = st.kind == SolveKind::Degenerate;
    m.x.assign(k, Rational(0));
    for (size_t i = 0; i < support.size(); ++i) m.x[support[i]] = st.x[i];
    for (int v = 0; v < k; ++v)
      if (m.x[v] > 0) m.support.push_back(v);
    consider(best, mask, st.nu, std::move(m));
  }
}

}  // namespace

GSolution g_exact(const Crg& K, const Rational& p, int threads) {
  const int k = K.order();
  if (k > kGExactLimit)
    throw std::invalid_argument("g_exact: CRG order " + std::to_string(k) + " exceeds the limit " +
                                std::to_string(kGExactLimit) + "; use g_iterative");
  const RationalMatrix M = weighted_matrix(K, p);
  const uint32_t total = 1u << k;

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (k < 12) workers = 1;

  Best best;
  if (workers == 1) {
    scan_masks(M, k, 1, total, best);
  } else {
    std::vector<Best> parts(workers);
    std::vector<std::thread> pool;
    const uint32_t chunk = (total - 1) / workers + 1;
    for (int w = 0; w < workers; ++w) {
      const uint32_t lo = std::max<uint32_t>(1, w * chunk);
      const uint32_t hi = std::min<uint32_t>(total, (w + 1) * chunk);
      if (lo >= hi) continue;
      pool.emplace_back([&, lo, hi, w] { scan_masks(M, k, lo, hi, parts[w]); });
    }
    for (auto& th : pool) th.join();
    for (Best& part : parts) {
      if (!part.any) continue;
      if (!best.any || part.g < best.g) {
        best.any = true;
        best.g = part.g;
        best.minimizers = std::move(part.minimizers);
      } else if (part.g == best.g) {
        for (auto& m : part.minimizers) best.minimizers.push_back(std::move(m));
      }
    }
  }
  if (!best.any) throw std::logic_error("g_exact: no feasible stationary point found");

  std::sort(best.minimizers.begin(), best.minimizers.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  GSolution sol;
  sol.g = best.g;
  sol.p = p;
  for (auto& [mask, m] : best.minimizers) sol.minimizers.push_back(std::move(m));

  // Prefer a non-degenerate representative, widest support first.
  const Minimizer* pick = nullptr;
  for (const Minimizer& m : sol.minimizers)
    if (!m.degenerate && (!pick || m.support.size() > pick->support.size())) pick = &m;
  if (!pick) pick = &sol.minimizers.front();
  sol.x = pick->x;
  sol.support = pick->support;

  bool full_degenerate = false;
  for (const Minimizer& m : sol.minimizers)
    if (m.degenerate && static_cast<int>(m.support.size()) == k) full_degenerate = true;
  if (full_degenerate)
    sol.pcore = PcoreVerdict::Indeterminate;
  else if (sol.minimizers.size() == 1 && !sol.minimizers[0].degenerate &&
           static_cast<int>(sol.minimizers[0].support.size()) == k)
    sol.pcore = PcoreVerdict::Yes;
  else
    sol.pcore = PcoreVerdict::No;
  return sol;
}

bool is_pcore(const Crg& K, const Rational& p) {
  return g_exact(K, p).pcore == PcoreVerdict::Yes;
}

namespace {

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& x) {
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  int rho = 0;
  for (int i = 0; i < static_cast<int>(u.size()); ++i) {
    cum += u[i];
    const double cand = (cum - 1.0) / (i + 1);
    if (u[i] - cand > 0) {
      rho = i + 1;
      theta = cand;
    }
  }
  (void)rho;
  for (double& v : x) v = std::max(0.0, v - theta);
}

double objective(const std::vector<std::vector<double>>& m, const std::vector<double>& x) {
  double total = 0.0;
  const int k = static_cast<int>(x.size());
  for (int i = 0; i < k; ++i) {
    double row = 0.0;
    for (int j = 0; j < k; ++j) row += m[i][j] * x[j];
    total += x[i] * row;
  }
  return total;
}

}  // namespace

GSolution g_iterative(const Crg& K, const Rational& p, int restarts, double tol, uint64_t seed) {
  if (tol <= 0) throw std::invalid_argument("g_iterative: tol must be positive");
  const int k = K.order();
  const RationalMatrix M = weighted_matrix(K, p);
  std::vector<std::vector<double>> m(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = to_double(M[i][j]);

  SplitMix64 rng(seed);
  std::vector<double> best_x;
  double best_val = 0.0;
  bool converged_any = false;

  for (int run = 0; run <= restarts; ++run) {
    std::vector<double> x(k);
    if (run == 0) {
      std::fill(x.begin(), x.end(), 1.0 / k);
    } else {
      double sum = 0.0;
      for (double& v : x) {
        v = -std::log(1.0 - rng.next_double());
        sum += v;
      }
      for (double& v : x) v /= sum;
    }
    double val = objective(m, x);
    double step = 0.5;
    bool converged = false;
    std::vector<double> grad(k), trial(k);
    for (int iter = 0; iter < 20000; ++iter) {
      for (int i = 0; i < k; ++i) {
        double g = 0.0;
        for (int j = 0; j < k; ++j) g += m[i][j] * x[j];
        grad[i] = 2.0 * g;
      }
      bool improved = false;
      while (step > 1e-18) {
        for (int i = 0; i < k; ++i) trial[i] = x[i] - step * grad[i];
        project_simplex(trial);
        const double tv = objective(m, trial);
        if (tv < val) {
          double move = 0.0;
          for (int i = 0; i < k; ++i) move = std::max(move, std::fabs(trial[i] - x[i]));
          const bool tiny = val - tv < tol * 1e-3 && move < tol;
          x = trial;
          val = tv;
          step *= 1.5;
          improved = true;
          if (tiny) converged = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved || converged) {
        converged = true;
        break;
      }
    }
    if (run == 0 || val < best_val) {
      best_val = val;
      best_x = x;
      converged_any = converged;
    }
  }

  GSolution sol;
  sol.p = p;
  sol.approximate = true;
  sol.converged = converged_any;
  sol.pcore = PcoreVerdict::Indeterminate;

  // Polish: solve the stationarity system exactly on the detected support.
  std::vector<int> support;
  for (int v = 0; v < k; ++v)
    if (best_x[v] > 1e-8) support.push_back(v);
  bool polished = false;
  if (!support.empty()) {
    Stationary st = solve_stationarity(M, support);
    if (st.kind != SolveKind::Inconsistent) {
      bool feasible = true;
      for (const Rational& xi : st.x)
        if (xi < 0) feasible = false;
      if (feasible && to_double(st.nu) <= best_val + tol) {
        sol.g = st.nu;
        sol.x.assign(k, Rational(0));
        for (size_t i = 0; i < support.size(); ++i) sol.x[support[i]] = st.x[i];
        polished = true;
      }
    }
  }
  if (!polished) {
    // Exact value of the rounded iterate: a certified upper bound on g.
    std::vector<Rational> xr(k, Rational(0));
    Rational sum(0);
    for (int v = 0; v < k; ++v) {
      if (best_x[v] <= 0) continue;
      xr[v] = Rational(best_x[v]);
      sum += xr[v];
    }
    for (Rational& v : xr) v /= sum;
    Rational g(0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) g += xr[i] * M[i][j] * xr[j];
    sol.g = g;
    sol.x = std::move(xr);
  }
  for (int v = 0; v < k; ++v)
    if (sol.x[v] > 0) sol.support.push_back(v);
  return sol;
}

GrayDegreeReport gray_degree_report(const Crg& K, const GSolution& sol) {
  const int k = K.order();
  GrayDegreeReport rep;
  rep.gray_degree.assign(k, Rational(0));
  for (int v = 0; v < k; ++v)
    for (int u = 0; u < k; ++u)
      if (u != v && K.edge(u, v) == EdgeColor::Gray) rep.gray_degree[v] += sol.x[u];
  rep.predicted_valid = sol.p != 0;
  if (rep.predicted_valid) {
    rep.predicted.assign(k, Rational(0));
    const Rational base = (sol.p - sol.g) / sol.p;
    const Rational slope = (1 - 2 * sol.p) / sol.p;
    for (int v = 0; v < k; ++v) rep.predicted[v] = base + slope * sol.x[v];
  }
  rep.equality_expected =
      rep.predicted_valid && K.all_black_vertices() && sol.pcore == PcoreVerdict::Yes;
  return rep;
}

}  // namespace edcrg

#include "edcrg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edcrg/gf.hpp"

namespace edcrg {

double BoundCurve::eval(double p) const {
  switch (kind) {
    case CurveKind::Affine:
      return to_double(a) + to_double(b) * p;
    case CurveKind::PTimes1MinusP:
      return p * (1 - p);
    case CurveKind::GenLB:
      return lower_genLB(t, p);
  }
  return 0;
}

std::optional<Rational> BoundCurve::eval_exact(const Rational& p) const {
  switch (kind) {
    case CurveKind::Affine:
      return a + b * p;
    case CurveKind::PTimes1MinusP:
      return p * (1 - p);
    case CurveKind::GenLB:
      return lower_genLB_exact(t, p);
  }
  return std::nullopt;
}

Rational exact_ed(int t, const Rational& p) {
  if (t == 3) return std::min(p * (1 - p), (1 - p) / 2);
  if (t == 4) return std::min({p * (1 - p), (1 + 7 * p) / 15, (1 - p) / 3});
  throw std::invalid_argument("exact_ed: closed form known only for t in {3,4}");
}

Rational exact_tail(int t, const Rational& p) {
  if (t < 4) throw std::invalid_argument("exact_tail: t >= 4 required");
  if (p * (t + 1) < 2) throw std::invalid_argument("exact_tail: p below 2/(t+1)");
  return (1 - p) / (t - 1);
}

double lower_genLB(int t, double p) {
  const double rad = 1 - 3 * p + (t + 1) * p * p;
  const double bracket = 3 * p - 2 + 2 * std::sqrt(std::max(0.0, rad));
  return p - (static_cast<double>(t - 1) / (4 * t - 5)) * bracket;
}

std::optional<Rational> lower_genLB_exact(int t, const Rational& p) {
  const Rational rad = 1 - 3 * p + (t + 1) * p * p;
  const auto root = rational_sqrt(rad);
  if (!root) return std::nullopt;
  return p - Rational(t - 1, 4 * t - 5) * (3 * p - 2 + 2 * *root);
}

double lower_k24_conclusion(double p) {
  if (p <= 0 || p >= 0.5)
    throw std::invalid_argument("lower_k24_conclusion: p must lie in (0, 1/2)");
  return (2 * p + 6 - 6 * std::sqrt(1 - 3 * p + 5 * p * p)) / 11;
}

BoundCurve srg_line(const SrgParams& params, int t) {
  if (params.lambda > t - 3 || params.mu > t - 1)
    throw std::invalid_argument("srg_line: parameters not eligible for t = " + std::to_string(t) +
                                " (need lambda <= t-3 and mu <= t-1)");
  BoundCurve c;
  c.name = "srg(" + std::to_string(params.k) + "," + std::to_string(params.d) + "," +
           std::to_string(params.lambda) + "," + std::to_string(params.mu) + ")";
  c.kind = CurveKind::Affine;
  c.a = Rational(1, params.k);
  c.b = Rational(params.k - params.d - 2, params.k);
  c.source = "srg";
  return c;
}

bool srg_feasible(const SrgParams& s) {
  return static_cast<long long>(s.d) * (s.d - s.lambda - 1) ==
         static_cast<long long>(s.mu) * (s.k - s.d - 1);
}

BoundCurve srg_equality_line(int t, int d) {
  if (d < 1) throw std::invalid_argument("srg_equality_line: d >= 1 required");
  const int D = t - 1 + d * (d + 1);
  BoundCurve c;
  c.name = "srg_equality(t=" + std::to_string(t) + ",d=" + std::to_string(d) + ")";
  c.kind = CurveKind::Affine;
  c.a = Rational(t - 1, D);
  c.b = 1 - Rational((d + 2) * (t - 1), D);
  c.integral_k = D % (t - 1) == 0;
  c.hypothetical = true;
  if (c.integral_k) {
    const SrgParams want{D / (t - 1), d, t - 3, t - 1};
    for (const ChartRow& row : srg_chart())
      if (row.builtin && row.params == want) c.hypothetical = false;
  }
  c.source = "srg_equality";
  return c;
}

double srg_theoretical_min(int t, double p) {
  const double root = std::sqrt(std::max(0.0, 1 - 3 * p + (t + 1) * p * p));
  return (p * (t - 2) + 2.0 * (t - 1)) / (4 * t - 5) - (2.0 * (t - 1) / (4 * t - 5)) * root;
}

Rational srg_tangency_p(int t, int d) {
  const int den = (d + 1) * (d + 3) - t;
  if (den <= 0) throw std::invalid_argument("srg_tangency_p: nonpositive denominator");
  return Rational(2 * d + 1, den);
}

namespace {

void require_furedi_params(int q, int t) {
  if (t < 3) throw std::invalid_argument("furedi: t >= 3 required");
  if (prime_power_decompose(q).first == 0)
    throw std::invalid_argument("furedi: q = " + std::to_string(q) + " is not a prime power");
  if ((q - 1) % (t - 1) != 0) throw std::invalid_argument("furedi: t-1 must divide q-1");
}

}  // namespace

BoundCurve furedi_line(int q, int t) {
  require_furedi_params(q, t);
  BoundCurve c;
  c.name = "furedi(" + std::to_string(q) + "," + std::to_string(t) + ")";
  c.kind = CurveKind::Affine;
  const Rational den(2 * (q * q - 1));
  c.a = Rational(t - 1) / den;
  c.b = Rational(2 * q * q - q * (t - 1) - 2 * t) / den;
  c.source = "furedi";
  return c;
}

std::optional<std::pair<double, double>> furedi_improvement_interval(int q, int t) {
  require_furedi_params(q, t);
  // furedi_line < p(1-p) iff 2p^2(q^2-1) - p(t-1)(q+2) + (t-1) < 0.
  const double A = 2.0 * (q * q - 1);
  const double B = -static_cast<double>(t - 1) * (q + 2);
  const double C = t - 1;
  const double disc = B * B - 4 * A * C;
  if (disc <= 0) return std::nullopt;
  const double s = std::sqrt(disc);
  return std::make_pair((-B - s) / (2 * A), (-B + s) / (2 * A));
}

std::optional<std::pair<double, double>> furedi_improvement_vs_envelope(int q, int t, int samples) {
  require_furedi_params(q, t);
  const BoundCurve line = furedi_line(q, t);
  auto h = [&](double p) {
    const double standing =
        std::min({p * (1 - p), (3 * p + 1) / (t + 5), (1 - p) / (t - 1)});
    return line.eval(p) - standing;
  };
  auto bisect = [&](double lo, double hi) {
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      if ((h(lo) < 0) == (h(mid) < 0))
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  double first = -1, last = -1, prev_p = 0;
  bool prev_neg = h(0) < 0;
  for (int i = 1; i <= samples; ++i) {
    const double p = 0.5 * i / samples;
    const bool neg = h(p) < 0;
    if (neg != prev_neg) {
      const double cross = bisect(prev_p, p);
      if (first < 0)
        first = cross;
      else
        last = cross;
    }
    prev_neg = neg;
    prev_p = p;
  }
  if (first < 0 || last < 0) return std::nullopt;
  return std::make_pair(first, last);
}

std::vector<int> furedi_feasible_q(int t) {
  if (t < 5 || t > 8) throw std::invalid_argument("furedi_feasible_q: 5 <= t <= 8 required");
  const double threshold =
      ((t - 1) + std::sqrt(static_cast<double>(t - 1) * (t - 1) + (9 - t) * (t + 1))) /
      ((9 - t) / 2.0);
  std::vector<int> out;
  for (int q = 2; q < threshold; ++q)
    if ((q - 1) % (t - 1) == 0 && prime_power_decompose(q).first != 0) out.push_back(q);
  return out;
}

bool furedi_monotone_check(int q0, int q, int t, int samples) {
  if (q0 >= q) throw std::invalid_argument("furedi_monotone_check: q0 < q required");
  if (samples < 2) throw std::invalid_argument("furedi_monotone_check: samples >= 2 required");
  const BoundCurve base = furedi_line(q0, t), other = furedi_line(q, t);
  const double lo = 2.0 / (4 + q0), hi = 1.0 / 3;
  for (int i = 0; i < samples; ++i) {
    const double p = lo + (hi - lo) * i / samples;
    if (base.eval(p) > other.eval(p) + 1e-15) return false;
  }
  return true;
}

namespace {

CatalogEntry trivial_p1mp() {
  CatalogEntry e;
  e.p1mp = true;
  e.source = CatalogSource::Trivial;
  e.origin = "K(1,1)";
  return e;
}

CatalogEntry affine_entry(Rational a, Rational b, CatalogSource src, std::string origin,
                          SrgParams params = {}) {
  CatalogEntry e;
  e.a = std::move(a);
  e.b = std::move(b);
  e.source = src;
  e.params = params;
  e.origin = std::move(origin);
  return e;
}

}  // namespace

std::vector<CatalogEntry> thm_sum_catalog(int t) {
  auto srg_row = [](int k, int d, int l, int m, const char* builtin) {
    return affine_entry(Rational(1, k), Rational(k - d - 2, k),
                        builtin ? CatalogSource::SrgBuiltin : CatalogSource::SrgFileOnly,
                        builtin ? builtin : "srg_file", {k, d, l, m});
  };
  switch (t) {
    case 5:
      return {trivial_p1mp(),
              srg_row(96, 19, 2, 4, nullptr),
              srg_row(40, 12, 2, 4, nullptr),
              srg_row(13, 6, 2, 3, "paley(13)"),
              affine_entry(Rational(1, 6), 0, CatalogSource::Matching, "matching(5)"),
              affine_entry(Rational(1, 4), Rational(-1, 4), CatalogSource::Trivial, "K(0,4)")};
    case 6:
      return {trivial_p1mp(),
              srg_row(85, 20, 3, 5, nullptr),
              srg_row(26, 10, 3, 4, nullptr),
              srg_row(17, 8, 3, 4, "paley(17)"),
              srg_row(10, 6, 3, 4, "petersen_complement"),
              affine_entry(Rational(1, 5), Rational(-1, 5), CatalogSource::Trivial, "K(0,5)")};
    case 7:
      return {trivial_p1mp(),
              srg_row(156, 30, 4, 6, nullptr),
              srg_row(100, 22, 0, 6, nullptr),
              srg_row(64, 18, 2, 6, nullptr),
              srg_row(49, 16, 3, 6, nullptr),
              srg_row(36, 14, 4, 6, nullptr),
              srg_row(16, 9, 4, 6, "rook_complement(4)"),
              affine_entry(Rational(1, 8), 0, CatalogSource::Matching, "matching(7)"),
              affine_entry(Rational(1, 6), Rational(-1, 6), CatalogSource::Trivial, "K(0,6)")};
    case 8:
      return {trivial_p1mp(),
              srg_row(156, 30, 4, 6, nullptr),
              srg_row(125, 28, 3, 7, nullptr),
              srg_row(76, 21, 2, 7, nullptr),
              srg_row(36, 14, 4, 6, nullptr),
              srg_row(25, 12, 5, 6, "paley(25)"),
              srg_row(16, 9, 4, 6, "rook_complement(4)"),
              affine_entry(Rational(1, 13), Rational(3, 13), CatalogSource::Cycle,
                           "cycle_power(13,2)"),
              affine_entry(Rational(1, 7), Rational(-1, 7), CatalogSource::Trivial, "K(0,7)")};
    default:
      throw std::invalid_argument("thm_sum_catalog: 5 <= t <= 8 required");
  }
}

std::vector<BoundCurve> upper_curves(int t) {
  if (t < 3) throw std::invalid_argument("upper_curves: t >= 3 required");
  std::vector<BoundCurve> out;
  for (const RegistryEntry& entry : construction_registry(t)) {
    BoundCurve c;
    c.name = entry.g_is_p1mp ? "p(1-p)" : entry.name;
    c.kind = entry.g_is_p1mp ? CurveKind::PTimes1MinusP : CurveKind::Affine;
    c.a = entry.f0;
    c.b = entry.f1;
    c.source = "registry";
    out.push_back(std::move(c));
  }
  for (const ChartRow& row : srg_chart()) {
    if (row.builtin || row.min_t > t) continue;
    BoundCurve c = srg_line(row.params, t);
    c.source = "srg_chart";
    out.push_back(std::move(c));
  }
  // Furedi lines: the feasible list for 5 <= t <= 8, otherwise every
  // improving line with q up to the field-size cap.
  std::vector<int> qs;
  if (t >= 5 && t <= 8) {
    qs = furedi_feasible_q(t);
  } else if (t >= 9) {
    for (int q = 2; q <= 128; ++q) {
      if ((q - 1) % (t - 1) != 0 || prime_power_decompose(q).first == 0) continue;
      if (furedi_improvement_interval(q, t)) qs.push_back(q);
    }
  }
  for (int q : qs) out.push_back(furedi_line(q, t));
  return out;
}

namespace {

double lower_raw(int t, double p) {
  if (t == 3 || t == 4) return to_double(exact_ed(t, Rational(p)));
  double best = 0;
  if (p < 0.5) {
    const double composite =
        std::min({p * (1 - p), (1 - p) / (t - 1), lower_genLB(t, p)});
    best = std::max(best, composite);
  }
  if (p * (t + 1) >= 2) best = std::max(best, (1 - p) / (t - 1));
  if (t % 2 == 1) {
    const double lo = static_cast<double>(2 * t - 1) / (t * (t + 1));
    const double hi = 2.0 / (t + 1);
    if (p >= lo && p <= hi) best = std::max(best, 1.0 / (t + 1));
  }
  return best;
}

bool exact_region(int t, double p, double eps = 1e-12) {
  if (t == 3 || t == 4) return true;
  if (p * (t + 1) >= 2 - eps) return true;
  if (t % 2 == 1) {
    const double lo = static_cast<double>(2 * t - 1) / (t * (t + 1));
    const double hi = 2.0 / (t + 1);
    if (p >= lo - eps && p <= hi + eps) return true;
  }
  return false;
}

// Upper concave hull of (x_i, y_i) with strictly increasing x; returns
// the hull value at every input x.
std::vector<double> concave_hull_values(const std::vector<double>& xs,
                                        const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  std::vector<int> hull;
  for (int i = 0; i < n; ++i) {
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      const double cross = (xs[b] - xs[a]) * (ys[i] - ys[a]) - (ys[b] - ys[a]) * (xs[i] - xs[a]);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }
  std::vector<double> out(n);
  size_t seg = 0;
  for (int i = 0; i < n; ++i) {
    while (seg + 1 < hull.size() && xs[hull[seg + 1]] < xs[i]) ++seg;
    const int a = hull[seg], b = hull[std::min(seg + 1, hull.size() - 1)];
    if (a == b || xs[b] == xs[a]) {
      out[i] = ys[a];
    } else {
      const double w = (xs[i] - xs[a]) / (xs[b] - xs[a]);
      out[i] = ys[a] + w * (ys[b] - ys[a]);
    }
  }
  return out;
}

}  // namespace

Envelope assemble_envelope(int t, int resolution) {
  if (resolution < 2) throw std::invalid_argument("assemble_envelope: resolution >= 2 required");
  const std::vector<BoundCurve> curves = upper_curves(t);
  Envelope env;
  env.points.resize(resolution);
  std::vector<double> xs(resolution), raw(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double p = static_cast<double>(i) / (resolution - 1);
    xs[i] = p;
    double best = 0;
    const BoundCurve* active = nullptr;
    for (const BoundCurve& c : curves) {
      const double v = c.eval(p);
      if (!active || v < best) {
        best = v;
        active = &c;
      }
    }
    env.points[i].p = p;
    env.points[i].upper = best;
    env.points[i].active_upper = active ? active->name : "";
    raw[i] = lower_raw(t, p);
  }
  const std::vector<double> hulled = concave_hull_values(xs, raw);
  for (int i = 0; i < resolution; ++i) {
    env.points[i].lower = std::min(hulled[i], env.points[i].upper);
    env.points[i].exact =
        exact_region(t, xs[i]) || env.points[i].upper - env.points[i].lower <= 1e-9;
  }

  ExtremePoint& ex = env.extreme;
  if (t == 3) {
    ex = {0.5, 0.5, 0.25, true};
  } else if (t == 4) {
    ex = {1.0 / 3, 1.0 / 3, 2.0 / 9, true};
  } else if (t % 2 == 1) {
    ex = {static_cast<double>(2 * t - 1) / (t * (t + 1)), 2.0 / (t + 1), 1.0 / (t + 1), true};
  } else {
    double best = 0;
    for (const EnvelopePoint& pt : env.points) best = std::max(best, pt.upper);
    double lo = 1, hi = 0;
    for (const EnvelopePoint& pt : env.points)
      if (pt.upper >= best - 1e-12) {
        lo = std::min(lo, pt.p);
        hi = std::max(hi, pt.p);
      }
    ex = {lo, hi, best, false};
  }
  return env;
}

PointBounds bound_at(int t, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("bound_at: p must lie in [0,1]");
  PointBounds out;
  bool have = false;
  for (const BoundCurve& c : upper_curves(t)) {
    const Rational v = *c.eval_exact(p);
    if (!have || v < out.upper) {
      out.upper = v;
      out.active_upper = c.name;
      have = true;
    }
  }
  if (t == 3 || t == 4) {
    const Rational e = exact_ed(t, p);
    out.upper = e;
    out.lower = to_double(e);
    out.lower_exact = e;
    out.exact = true;
    return out;
  }
  if (p * (t + 1) >= 2) {
    const Rational tail = exact_tail(t, p);
    out.upper = tail;
    out.active_upper = "K(0," + std::to_string(t - 1) + ")";
    out.lower = to_double(tail);
    out.lower_exact = tail;
    out.exact = true;
    return out;
  }
  if (t % 2 == 1 && p * t * (t + 1) >= 2 * t - 1 && p * (t + 1) <= 2) {
    const Rational plateau(1, t + 1);
    out.lower = to_double(plateau);
    out.lower_exact = plateau;
    out.exact = out.upper == plateau;
    return out;
  }
  const double pd = to_double(p);
  double lower = lower_raw(t, pd);
  std::optional<Rational> exact_gen = lower_genLB_exact(t, p);
  if (exact_gen) {
    const Rational composite = std::min({p * (1 - p), (1 - p) / (t - 1), *exact_gen});
    out.lower_exact = composite;
    lower = std::max(lower, to_double(composite));
  }
  out.lower = std::max(0.0, lower);
  out.exact = false;
  return out;
}

}  // namespace edcrg

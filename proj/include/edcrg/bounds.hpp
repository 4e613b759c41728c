#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edcrg/constructions.hpp"
#include "edcrg/rational.hpp"

namespace edcrg {

enum class CurveKind : uint8_t { Affine, PTimes1MinusP, GenLB };
enum class CurveSide : uint8_t { Upper, Lower };

struct BoundCurve {
  std::string name;
  CurveSide side = CurveSide::Upper;
  CurveKind kind = CurveKind::Affine;
  Rational lo = 0, hi = 1;  // validity interval
  Rational a, b;            // affine: a + b*p
  int t = 0;                // GenLB parameter
  bool hypothetical = false;  // equality lines without a verified SRG
  bool integral_k = true;     // equality lines: whether k is an integer
  std::string source;

  double eval(double p) const;
  // Exact evaluation; nullopt for GenLB when the radicand is not a
  // rational square.
  std::optional<Rational> eval_exact(const Rational& p) const;
};

// t = 3: min{p(1-p), (1-p)/2}; t = 4: min{p(1-p), (1+7p)/15, (1-p)/3}.
Rational exact_ed(int t, const Rational& p);

// (1-p)/(t-1), valid (and exact) for p >= 2/(t+1), t >= 4.
Rational exact_tail(int t, const Rational& p);

// p - ((t-1)/(4t-5)) [3p - 2 + 2 sqrt(1 - 3p + (t+1)p^2)].
double lower_genLB(int t, double p);
std::optional<Rational> lower_genLB_exact(int t, const Rational& p);

// The t = 4 specialization (2p + 6 - 6 sqrt(1 - 3p + 5p^2))/11.
double lower_k24_conclusion(double p);

// (1 + (k-d-2)p)/k, eligible only when lambda <= t-3 and mu <= t-1.
BoundCurve srg_line(const SrgParams& params, int t);

// The parameter identity d(d - lambda - 1) = mu(k - d - 1).
bool srg_feasible(const SrgParams& params);

// Best-case line of a hypothetical (k,d,t-3,t-1) SRG with
// k = (t-1+d(d+1))/(t-1); realized (non-hypothetical) only when a
// verified built-in SRG has exactly those parameters.
BoundCurve srg_equality_line(int t, int d);

// (p(t-2) + 2(t-1))/(4t-5) - (2(t-1)/(4t-5)) sqrt(1 - 3p + (t+1)p^2);
// algebraically identical to lower_genLB.
double srg_theoretical_min(int t, double p);

// p = (2d+1)/((d+1)(d+3)-t); at this p the equality line meets the
// general lower bound.
Rational srg_tangency_p(int t, int d);

// (t-1 + p(2q^2 - q(t-1) - 2t))/(2(q^2-1)); requires t-1 | q-1.
BoundCurve furedi_line(int q, int t);

// Open interval where furedi_line < p(1-p) (real-root interval of
// 2p^2(q^2-1) - p(t-1)(q+2) + (t-1)); nullopt if no improvement.
std::optional<std::pair<double, double>> furedi_improvement_interval(int q, int t);

// Interval where furedi_line < min{p(1-p), (3p+1)/(t+5), (1-p)/(t-1)},
// located by sampling plus bisection.
std::optional<std::pair<double, double>> furedi_improvement_vs_envelope(int q, int t,
                                                                        int samples = 4096);

// All prime powers q with t-1 | q-1 under the improvement threshold
// q < ((t-1) + sqrt((t-1)^2 + (9-t)(t+1)))/((9-t)/2); only 5 <= t <= 8.
std::vector<int> furedi_feasible_q(int t);

// furedi_line(q0,t) <= furedi_line(q,t) on a grid of [2/(4+q0), 1/3).
bool furedi_monotone_check(int q0, int q, int t, int samples);

enum class CatalogSource : uint8_t { Trivial, Matching, Cycle, SrgBuiltin, SrgFileOnly };

struct CatalogEntry {
  bool p1mp = false;  // the p(1-p) entry
  Rational a, b;      // affine a + b*p otherwise
  CatalogSource source;
  SrgParams params;    // for SRG rows
  std::string origin;  // generator name / description
};

// The verbatim summary-bound list for 5 <= t <= 8, each entry tagged
// with the construction it comes from.
std::vector<CatalogEntry> thm_sum_catalog(int t);

// Upper curves feeding the envelope for any t >= 3: registry curves,
// chart rows eligible at t, and improving Furedi lines (q capped at 128).
std::vector<BoundCurve> upper_curves(int t);

struct EnvelopePoint {
  double p, upper, lower;
  bool exact;
  std::string active_upper;
};

struct ExtremePoint {
  double lo = 0, hi = 0;  // argmax interval of the (upper) envelope
  double value = 0;
  bool exact = false;
};

struct Envelope {
  std::vector<EnvelopePoint> points;
  ExtremePoint extreme;
};

// Sampled upper/lower envelopes on a uniform grid; the lower envelope is
// strengthened to its upper concave hull (valid since the target
// function is concave).
Envelope assemble_envelope(int t, int resolution = 2001);

struct PointBounds {
  Rational upper;
  std::string active_upper;
  double lower = 0;
  std::optional<Rational> lower_exact;
  bool exact = false;  // upper and lower provably coincide at this p
};

// Exact-arithmetic point query used by the CLI.
PointBounds bound_at(int t, const Rational& p);

}  // namespace edcrg

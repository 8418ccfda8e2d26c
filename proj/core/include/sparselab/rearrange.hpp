#pragma once

#include "sparselab/grid.hpp"

#include <optional>

namespace sparselab {

struct LpNorms {
    double strong = 0.0;
    double weak = 0.0;
};

// strong = (int |f|^p w)^(1/p); weak = sup over attained levels t of
// t * w({|f| >= t})^(1/p), exact on piecewise-constant data
LpNorms lp_norms(const GridFunction& f, double p, const GridFunction* w = nullptr);

// f*(t) = inf{ alpha > 0 : |{|f| > alpha}| <= t }, t in measure units
double decreasing_rearrangement(const GridFunction& f, double t);

// quantile of the |.| distribution: inf{ alpha >= 0 : mu(|v| > alpha) <= t_u }
double distribution_quantile_abs(const Distribution& dist, std::int64_t t_u);

// Rearrangement oscillation: inf_c ((f - c) chi_Q)*(lambda |Q|). The inf
// over c is exact: the objective is piecewise linear in c with minima at
// midpoints of attained-value pairs, so those midpoints are scanned.
double local_oscillation(const GridFunction& f, const DyadicCube& q, double lambda);
double local_oscillation(const Distribution& dist, double lambda);

// Lerner-Nazarov oscillation: min over E within Q, |E| <= lambda |Q|, of
// sup - inf of f on Q \ E. Exact two-tail trim over the sorted values
// (only fully removed values leave the range, so tail removal is optimal).
double ln_oscillation(const GridFunction& f, const DyadicCube& q, double lambda);
double ln_oscillation(const Distribution& dist, double lambda);

// the trim that attains ln_oscillation: closed value window [lo, hi]
struct TrimWindow {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};
TrimWindow ln_trim_window(const Distribution& dist, double lambda);

// a median of the distribution: both strict tails have measure <= total/2
double distribution_median(const Distribution& dist);
double median_on(const GridFunction& f, const DyadicCube& q);

// sup over cubes of all three lattices of <|b - b_Q|>_Q (conditional
// averages; the all-cube BMO norm is comparable but not equal)
double bmo_norm(const GridFunction& b);

} // namespace sparselab

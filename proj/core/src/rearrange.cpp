#include "sparselab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sparselab {

LpNorms lp_norms(const GridFunction& f, double p, const GridFunction* w) {
    if (p <= 0) throw std::invalid_argument("lp_norms: p must be positive");
    const Domain& d = f.domain();
    const double h = d.cell_size();
    LpNorms out;

    double s = 0.0;
    for (std::int64_t i = 0; i < f.size(); ++i) {
        const double wi = w ? (*w)[i] : 1.0;
        s += std::pow(std::fabs(f[i]), p) * wi * h;
    }
    out.strong = std::pow(s, 1.0 / p);

    // sort levels descending, accumulate w({|f| >= t}) exactly
    std::vector<std::pair<double, double>> lv(std::size_t(f.size()));
    for (std::int64_t i = 0; i < f.size(); ++i)
        lv[std::size_t(i)] = {std::fabs(f[i]), (w ? (*w)[i] : 1.0) * h};
    std::sort(lv.begin(), lv.end(), [](auto& a, auto& b) { return a.first > b.first; });
    double cum = 0.0, best = 0.0;
    for (std::size_t i = 0; i < lv.size(); ++i) {
        cum += lv[i].second;
        if (i + 1 < lv.size() && lv[i + 1].first == lv[i].first) continue;
        if (lv[i].first > 0.0) best = std::max(best, lv[i].first * std::pow(cum, 1.0 / p));
    }
    out.weak = best;
    return out;
}

double decreasing_rearrangement(const GridFunction& f, double t) {
    if (t <= 0) throw std::invalid_argument("decreasing_rearrangement: t must be positive");
    const double h = f.domain().cell_size();
    std::vector<double> v(f.values());
    for (double& x : v) x = std::fabs(x);
    std::sort(v.begin(), v.end(), std::greater<>());
    // candidates for the inf are the attained values and 0
    auto measure_gt = [&](double alpha) {
        double mm = 0.0;
        for (double x : v)
            if (x > alpha) mm += h;
        return mm;
    };
    if (measure_gt(0.0) <= t) return 0.0;
    double best = v.front();
    for (double x : v)
        if (measure_gt(x) <= t) best = std::min(best, x);
    return best;
}

double distribution_quantile_abs(const Distribution& dist, std::int64_t t_u) {
    std::vector<std::pair<double, std::int64_t>> a;
    a.reserve(dist.atoms.size());
    for (const auto& [v, m] : dist.atoms) a.emplace_back(std::fabs(v), m);
    std::sort(a.begin(), a.end(), [](auto& x, auto& y) { return x.first > y.first; });
    // smallest attained alpha (or 0) with mu(|v| > alpha) <= t_u
    std::int64_t above = 0;
    double best = a.empty() ? 0.0 : a.front().first;
    std::size_t i = 0;
    while (i < a.size()) {
        std::size_t j = i;
        while (j < a.size() && a[j].first == a[i].first) ++j;
        if (above <= t_u) best = a[i].first; // mu(> a[i]) = above
        for (std::size_t k = i; k < j; ++k) above += a[k].second;
        i = j;
    }
    if (above <= t_u) best = 0.0; // everything removable
    return best;
}

namespace {

std::int64_t lambda_budget(std::int64_t total, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("oscillation: lambda must be in (0,1)");
    // largest integer <= lambda * total, robust to fp representation of
    // rationals like 1/8 or 1/6
    auto b = std::int64_t(std::floor(lambda * double(total) + 1e-9));
    return std::min(b, total);
}

std::vector<std::pair<double, std::int64_t>> sorted_atoms(const Distribution& dist) {
    auto a = dist.atoms;
    std::sort(a.begin(), a.end());
    // merge equal values
    std::vector<std::pair<double, std::int64_t>> out;
    for (const auto& [v, m] : a) {
        if (!out.empty() && out.back().first == v) out.back().second += m;
        else out.emplace_back(v, m);
    }
    return out;
}

} // namespace

TrimWindow ln_trim_window(const Distribution& dist, double lambda) {
    const auto a = sorted_atoms(dist);
    const std::int64_t budget = lambda_budget(dist.total, lambda);
    // prefix measures
    std::vector<std::int64_t> pre(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) pre[i + 1] = pre[i] + a[i].second;
    const std::int64_t total = pre.back();

    TrimWindow best{a.front().first, a.back().first};
    // drop the first lo values entirely and as many top values as fit
    for (std::size_t lo = 0; lo < a.size(); ++lo) {
        if (pre[lo] > budget) break;
        const std::int64_t left = budget - pre[lo];
        // smallest hi > lo with suffix measure (from hi..end) <= left
        std::size_t hi = a.size();
        while (hi > lo + 1 && total - pre[hi - 1] <= left) --hi;
        TrimWindow w{a[lo].first, a[hi - 1].first};
        if (w.width() < best.width()) best = w;
    }
    return best;
}

double ln_oscillation(const Distribution& dist, double lambda) {
    if (dist.atoms.empty()) return 0.0;
    const std::int64_t budget = lambda_budget(dist.total, lambda);
    if (budget >= dist.total) return 0.0;
    return ln_trim_window(dist, lambda).width();
}

double ln_oscillation(const GridFunction& f, const DyadicCube& q, double lambda) {
    return ln_oscillation(distribution_on(f, cube_interval(f.domain(), q)), lambda);
}

double local_oscillation(const Distribution& dist, double lambda) {
    if (dist.atoms.empty()) return 0.0;
    const std::int64_t budget = lambda_budget(dist.total, lambda);
    if (budget >= dist.total) return 0.0;
    const auto a = sorted_atoms(dist);
    // candidate centers: midpoints of attained-value pairs (includes the
    // attained values themselves)
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) {
            const double c = 0.5 * (a[i].first + a[j].first);
            Distribution shifted;
            shifted.total = dist.total;
            shifted.atoms.reserve(a.size());
            for (const auto& [v, m] : a) shifted.atoms.emplace_back(v - c, m);
            best = std::min(best, distribution_quantile_abs(shifted, budget));
        }
    return best;
}

double local_oscillation(const GridFunction& f, const DyadicCube& q, double lambda) {
    return local_oscillation(distribution_on(f, cube_interval(f.domain(), q)), lambda);
}

double distribution_median(const Distribution& dist) {
    const auto a = sorted_atoms(dist);
    std::int64_t below = 0;
    for (const auto& [v, m] : a) {
        // measure strictly above v
        const std::int64_t above = dist.total - below - m;
        if (2 * below <= dist.total && 2 * above <= dist.total) return v;
        below += m;
    }
    return a.back().first; // unreachable for nonempty input
}

double median_on(const GridFunction& f, const DyadicCube& q) {
    return distribution_median(distribution_on(f, cube_interval(f.domain(), q)));
}

double bmo_norm(const GridFunction& b) {
    const Domain& d = b.domain();
    double best = 0.0;
    for (int shift = 0; shift < 3; ++shift)
        for (int level = 0; level <= d.depth; ++level)
            for (const auto& q : lattice_level(d, shift, level)) {
                const IntervalU in = cube_interval(d, q).clamp(0, d.micro_total());
                if (in.empty()) continue;
                const double bq = average_restricted(b, in);
                double osc = 0.0;
                for (const auto& [v, m] : distribution_on(b, in).atoms)
                    osc += std::fabs(v - bq) * double(m);
                best = std::max(best, osc / double(in.measure()));
            }
    return best;
}

} // namespace sparselab

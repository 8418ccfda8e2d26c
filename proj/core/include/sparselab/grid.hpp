#pragma once

#include "sparselab/domain.hpp"

#include <cmath>
#include <functional>
#include <iosfwd>
#include <vector>

namespace sparselab {

// Piecewise-constant real function on the 2^depth finest cells.
// Integrals over micro-aligned intervals are exact sums; the function is
// extended by zero outside [0, length), so averages over overhanging
// cubes use the full geometric side as denominator.
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(const Domain& d, double value = 0.0)
        : dom_(d), v_(std::size_t(d.cells()), value) {}
    GridFunction(const Domain& d, std::vector<double> values);
    GridFunction(const Domain& d, const std::function<double(double)>& f);

    const Domain& domain() const { return dom_; }
    std::int64_t size() const { return std::int64_t(v_.size()); }
    double operator[](std::int64_t i) const { return v_[std::size_t(i)]; }
    double& operator[](std::int64_t i) { return v_[std::size_t(i)]; }
    const std::vector<double>& values() const { return v_; }

    // exact integral over [iv.lo, iv.hi) in micro units, zero outside domain
    double integral_u(IntervalU iv) const;
    double integral() const { return integral_u({0, dom_.micro_total()}); }

    GridFunction map(const std::function<double(double)>& f) const;
    GridFunction abs() const;
    double max_abs() const;

    // writes/reads the CSV form: "# domain_length,depth" header line,
    // a "length,depth" line, then one value per line
    void write_csv(std::ostream& os) const;
    static GridFunction read_csv(std::istream& is);

  private:
    Domain dom_;
    std::vector<double> v_;
};

// average over a micro interval with an explicit geometric denominator
double average_u(const GridFunction& f, IntervalU iv, std::int64_t denom_u);

// (1/|Q|) integral of f over Q; |Q| is the geometric cube measure
inline double average(const GridFunction& f, const DyadicCube& q) {
    return average_u(f, cube_interval(f.domain(), q), cube_side_u(f.domain(), q));
}
inline double average(const GridFunction& f, IntervalU iv) {
    if (iv.empty()) throw std::invalid_argument("average: empty interval");
    return average_u(f, iv, iv.measure());
}

// conditional average over Q intersected with the domain (for symbols and
// weights, which are not zero-extended)
double average_restricted(const GridFunction& f, IntervalU iv);
inline double average_restricted(const GridFunction& f, const DyadicCube& q) {
    return average_restricted(f, cube_interval(f.domain(), q));
}

// <|f|^r>_Q^(1/r)
double power_average(const GridFunction& f, IntervalU iv, double r);
inline double power_average(const GridFunction& f, const DyadicCube& q, double r) {
    return power_average(f, cube_interval(f.domain(), q), r);
}

// Distribution of f on a micro interval: (value, measure) pairs, measures
// in micro units, including the zero-extension part outside the domain.
struct Distribution {
    std::vector<std::pair<double, std::int64_t>> atoms; // unsorted
    std::int64_t total = 0;                             // sum of measures
};
Distribution distribution_on(const GridFunction& f, IntervalU iv);

// Finite family of component functions sharing one domain; the l^q
// aggregate |F|_q is computed per cell.
class VectorFunction {
  public:
    VectorFunction() = default;
    explicit VectorFunction(std::vector<GridFunction> comps);
    explicit VectorFunction(GridFunction f) { comps_.push_back(std::move(f)); }

    std::size_t components() const { return comps_.size(); }
    const GridFunction& operator[](std::size_t j) const { return comps_[j]; }
    const Domain& domain() const { return comps_.at(0).domain(); }

    GridFunction lq_norm(double q) const;

  private:
    std::vector<GridFunction> comps_;
};

// pointwise combinators
GridFunction cellwise(const GridFunction& a, const GridFunction& b,
                      const std::function<double(double, double)>& op);
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double c, const GridFunction& a);

} // namespace sparselab

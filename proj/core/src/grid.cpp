#include "sparselab/grid.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace sparselab {

GridFunction::GridFunction(const Domain& d, std::vector<double> values)
    : dom_(d), v_(std::move(values)) {
    if (std::int64_t(v_.size()) != d.cells())
        throw std::invalid_argument("GridFunction: value count != cell count");
    for (double x : v_)
        if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: non-finite entry");
}

GridFunction::GridFunction(const Domain& d, const std::function<double(double)>& f)
    : dom_(d), v_(std::size_t(d.cells())) {
    for (std::int64_t i = 0; i < d.cells(); ++i) v_[std::size_t(i)] = f(d.cell_mid(i));
}

double GridFunction::integral_u(IntervalU iv) const {
    iv = iv.clamp(0, dom_.micro_total());
    if (iv.empty()) return 0.0;
    const double u = dom_.micro_size();
    const std::int64_t c0 = iv.lo / 3, c1 = (iv.hi - 1) / 3; // touched cells
    if (c0 == c1) return v_[std::size_t(c0)] * double(iv.hi - iv.lo) * u;
    double sum = v_[std::size_t(c0)] * double(3 * (c0 + 1) - iv.lo) * u;
    for (std::int64_t c = c0 + 1; c < c1; ++c) sum += v_[std::size_t(c)] * 3.0 * u;
    sum += v_[std::size_t(c1)] * double(iv.hi - 3 * c1) * u;
    return sum;
}

GridFunction GridFunction::map(const std::function<double(double)>& f) const {
    GridFunction out(dom_);
    for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = f(v_[i]);
    return out;
}

GridFunction GridFunction::abs() const {
    return map([](double x) { return std::fabs(x); });
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::fabs(x));
    return m;
}

void GridFunction::write_csv(std::ostream& os) const {
    os << "# domain_length,depth\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%d\n", dom_.length, dom_.depth);
    os << buf;
    for (double x : v_) {
        std::snprintf(buf, sizeof buf, "%.17g\n", x);
        os << buf;
    }
}

GridFunction GridFunction::read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind('#', 0) != 0)
        throw std::invalid_argument("GridFunction csv: missing header");
    if (!std::getline(is, line)) throw std::invalid_argument("GridFunction csv: missing meta row");
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("GridFunction csv: bad meta row");
    Domain d(std::stod(line.substr(0, comma)), std::stoi(line.substr(comma + 1)));
    std::vector<double> vals;
    vals.reserve(std::size_t(d.cells()));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        vals.push_back(std::stod(line));
    }
    return GridFunction(d, std::move(vals));
}

double average_u(const GridFunction& f, IntervalU iv, std::int64_t denom_u) {
    if (denom_u <= 0) throw std::invalid_argument("average: empty cube");
    return f.integral_u(iv) / (double(denom_u) * f.domain().micro_size());
}

double average_restricted(const GridFunction& f, IntervalU iv) {
    iv = iv.clamp(0, f.domain().micro_total());
    if (iv.empty()) throw std::invalid_argument("average_restricted: no overlap with domain");
    return average_u(f, iv, iv.measure());
}

double power_average(const GridFunction& f, IntervalU iv, double r) {
    if (r <= 0) throw std::invalid_argument("power_average: r must be positive");
    const auto d = distribution_on(f, iv);
    double s = 0.0;
    for (const auto& [v, m] : d.atoms) s += std::pow(std::fabs(v), r) * double(m);
    return std::pow(s / double(d.total), 1.0 / r);
}

Distribution distribution_on(const GridFunction& f, IntervalU iv) {
    if (iv.empty()) throw std::invalid_argument("distribution_on: empty interval");
    Distribution out;
    out.total = iv.measure();
    const IntervalU in = iv.clamp(0, f.domain().micro_total());
    const std::int64_t outside = iv.measure() - in.measure();
    if (outside > 0) out.atoms.emplace_back(0.0, outside);
    if (in.empty()) return out;
    const std::int64_t c0 = in.lo / 3, c1 = (in.hi - 1) / 3;
    if (c0 == c1) {
        out.atoms.emplace_back(f[c0], in.hi - in.lo);
        return out;
    }
    out.atoms.emplace_back(f[c0], 3 * (c0 + 1) - in.lo);
    for (std::int64_t c = c0 + 1; c < c1; ++c) out.atoms.emplace_back(f[c], 3);
    out.atoms.emplace_back(f[c1], in.hi - 3 * c1);
    return out;
}

VectorFunction::VectorFunction(std::vector<GridFunction> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("VectorFunction: needs >= 1 component");
    for (const auto& c : comps_)
        if (!(c.domain() == comps_[0].domain()))
            throw std::invalid_argument("VectorFunction: mixed domains");
}

GridFunction VectorFunction::lq_norm(double q) const {
    const Domain& d = domain();
    GridFunction out(d);
    for (std::int64_t i = 0; i < d.cells(); ++i) {
        double s = 0.0;
        for (const auto& c : comps_) s += std::pow(std::fabs(c[i]), q);
        out[i] = std::pow(s, 1.0 / q);
    }
    return out;
}

GridFunction cellwise(const GridFunction& a, const GridFunction& b,
                      const std::function<double(double, double)>& op) {
    if (!(a.domain() == b.domain())) throw std::invalid_argument("cellwise: domain mismatch");
    GridFunction out(a.domain());
    for (std::int64_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    return cellwise(a, b, [](double x, double y) { return x + y; });
}
GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    return cellwise(a, b, [](double x, double y) { return x - y; });
}
GridFunction operator*(const GridFunction& a, const GridFunction& b) {
    return cellwise(a, b, [](double x, double y) { return x * y; });
}
GridFunction operator*(double c, const GridFunction& a) {
    return a.map([c](double x) { return c * x; });
}

} // namespace sparselab

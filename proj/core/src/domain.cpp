#include "sparselab/domain.hpp"

#include <algorithm>
#include <cmath>

namespace sparselab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

void check_cube(const Domain& d, const DyadicCube& q) {
    if (q.shift < 0 || q.shift > 2) throw std::invalid_argument("cube: shift must be 0, 1 or 2");
    if (q.level < 0 || q.level > d.depth) throw std::invalid_argument("cube: level out of range");
}

} // namespace

DyadicCube cube_at_2u(const Domain& d, int shift, int level, std::int64_t x2) {
    const std::int64_t scale2 = std::int64_t(2) << (d.depth - level); // 2 * micro scale
    const std::int64_t off2 = lattice_offset_thirds(shift, level) * scale2;
    return {shift, level, floor_div(x2 - off2, 3 * scale2)};
}

CubeSet::CubeSet(std::vector<DyadicCube> cubes) : cubes_(std::move(cubes)) {
    std::sort(cubes_.begin(), cubes_.end());
    cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
}

void CubeSet::insert(const DyadicCube& q) {
    auto it = std::lower_bound(cubes_.begin(), cubes_.end(), q);
    if (it == cubes_.end() || !(*it == q)) cubes_.insert(it, q);
}

bool CubeSet::contains(const DyadicCube& q) const {
    return std::binary_search(cubes_.begin(), cubes_.end(), q);
}

CubeSet children(const Domain& d, const DyadicCube& q) {
    check_cube(d, q);
    if (q.level >= d.depth) throw std::invalid_argument("children: leaf cube");
    const std::int64_t left = cube_left_u(d, q);
    const std::int64_t half = cube_side_u(d, q) / 2;
    const int lvl = q.level + 1;
    const std::int64_t scale = std::int64_t(1) << (d.depth - lvl);
    const std::int64_t off = lattice_offset_thirds(q.shift, lvl) * scale;
    // left endpoints land exactly on the child grid
    std::vector<DyadicCube> kids;
    for (int k = 0; k < 2; ++k) {
        const std::int64_t lo = left + k * half;
        kids.push_back({q.shift, lvl, (lo - off) / (3 * scale)});
    }
    return CubeSet(std::move(kids));
}

DyadicCube parent(const Domain& d, const DyadicCube& q) {
    check_cube(d, q);
    if (q.level == 0) throw std::invalid_argument("parent: root cube");
    const std::int64_t lo2 = 2 * cube_left_u(d, q);
    return cube_at_2u(d, q.shift, q.level - 1, lo2 + 1);
}

std::vector<DyadicCube> lattice_level(const Domain& d, int shift, int level) {
    if (shift < 0 || shift > 2) throw std::invalid_argument("lattice_level: bad shift");
    if (level < 0 || level > d.depth) throw std::invalid_argument("lattice_level: bad level");
    std::vector<DyadicCube> out;
    const std::int64_t count = std::int64_t(1) << level;
    const std::int64_t first = (shift == 0) ? 0 : -1;
    out.reserve(std::size_t(count - first));
    for (std::int64_t j = first; j < count; ++j) out.push_back({shift, level, j});
    return out;
}

IntervalU triple_clamped(const Domain& d, const DyadicCube& q) {
    return triple_raw(d, q).clamp(0, d.micro_total());
}

DyadicCube containing_triple(const Domain& d, const IntervalU& iv) {
    if (iv.empty()) throw std::invalid_argument("containing_triple: empty interval");
    // walk levels coarse to fine; remember the smallest cover seen
    bool found = false;
    DyadicCube best{};
    for (int level = 0; level <= d.depth; ++level) {
        for (int shift = 0; shift < 3; ++shift) {
            DyadicCube q = cube_at_2u(d, shift, level, 2 * iv.lo);
            if (cube_interval(d, q).contains(iv)) {
                best = q;
                found = true;
            }
        }
        // sides only shrink from here on; the next level cannot cover a
        // longer interval than its side
        if ((std::int64_t(3) << (d.depth - level)) < 2 * iv.measure()) break;
    }
    if (!found) throw std::invalid_argument("containing_triple: no lattice cube covers interval");
    return best;
}

WhitneyResult whitney_decomposition(const Domain& d, const std::vector<bool>& open_cells) {
    const std::int64_t n = d.cells();
    if (std::int64_t(open_cells.size()) != n)
        throw std::invalid_argument("whitney: mask size mismatch");

    WhitneyResult res;
    bool all = true, any = false;
    for (bool b : open_cells) { all = all && b; any = any || b; }
    if (!any) return res;
    if (all) {
        res.cubes.insert({0, 0, 0});
        res.no_complement = true;
        return res;
    }

    // distance (in cells) from each cell to the nearest complement cell,
    // counting the exterior of the domain as complement
    std::vector<std::int64_t> dist(n);
    std::int64_t last = -1; // nearest complement cell to the left (or exterior at -1)
    for (std::int64_t i = 0; i < n; ++i) {
        if (!open_cells[i]) last = i;
        dist[i] = open_cells[i] ? i - last - 1 : 0;
    }
    std::int64_t next = n;
    for (std::int64_t i = n - 1; i >= 0; --i) {
        if (!open_cells[i]) next = i;
        else dist[i] = std::min(dist[i], next - i - 1);
    }

    std::vector<std::int64_t> pcnt(n + 1, 0);
    for (std::int64_t i = 0; i < n; ++i) pcnt[i + 1] = pcnt[i] + (open_cells[i] ? 1 : 0);

    // maximal shift-0 cubes inside the set with dist(Q, complement) > 8 |Q|;
    // dist of the cube = min over its cells of the cell distance (in cells),
    // both sides measured in cells so the ratio test is integer-exact
    struct Frame { int level; std::int64_t index; };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const std::int64_t w = n >> f.level;           // cells in cube
        const std::int64_t a = f.index * w, b = a + w; // cell range
        if (pcnt[b] - pcnt[a] == 0) continue;          // entirely outside the set
        const bool inside = (pcnt[b] - pcnt[a] == w);
        if (inside) {
            std::int64_t dmin = dist[a];
            for (std::int64_t i = a; i < b; ++i) dmin = std::min(dmin, dist[i]);
            if (dmin > 8 * w) {
                res.cubes.insert({0, f.level, f.index});
                continue;
            }
            if (w == 1) { // grid floor: keep the cell to preserve the exact cover
                res.cubes.insert({0, f.level, f.index});
                ++res.at_grid_floor;
                continue;
            }
        } else if (w == 1) {
            continue;
        }
        stack.push_back({f.level + 1, 2 * f.index});
        stack.push_back({f.level + 1, 2 * f.index + 1});
    }
    return res;
}

void IntervalSet::subtract(const IntervalU& cut) {
    if (cut.empty()) return;
    std::vector<IntervalU> out;
    out.reserve(parts_.size() + 1);
    for (const auto& p : parts_) {
        if (p.hi <= cut.lo || cut.hi <= p.lo) { out.push_back(p); continue; }
        if (p.lo < cut.lo) out.push_back({p.lo, cut.lo});
        if (cut.hi < p.hi) out.push_back({cut.hi, p.hi});
    }
    parts_ = std::move(out);
}

IntervalSet IntervalSet::take_left(std::int64_t amount) {
    IntervalSet taken;
    std::vector<IntervalU> rest;
    for (const auto& p : parts_) {
        if (amount <= 0) { rest.push_back(p); continue; }
        const std::int64_t m = p.measure();
        if (m <= amount) {
            taken.parts_.push_back(p);
            amount -= m;
        } else {
            taken.parts_.push_back({p.lo, p.lo + amount});
            rest.push_back({p.lo + amount, p.hi});
            amount = 0;
        }
    }
    if (amount > 0) throw std::runtime_error("IntervalSet::take_left: not enough measure");
    parts_ = std::move(rest);
    return taken;
}

std::int64_t IntervalSet::measure() const {
    std::int64_t m = 0;
    for (const auto& p : parts_) m += p.measure();
    return m;
}

} // namespace sparselab

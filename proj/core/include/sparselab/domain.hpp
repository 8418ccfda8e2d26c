#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparselab {

// Bounded 1-D domain [0, length) split into N = 2^depth equal cells.
//
// All cube geometry is done in integer "micro units" u = length / (3 * N).
// A cell spans 3 micro units; every cube of every shifted lattice has its
// endpoints on the micro grid, so containment, clamping and measures are
// exact integer arithmetic.
struct Domain {
    double length = 1.0;
    int depth = 1;

    Domain() = default;
    Domain(double len, int L) : length(len), depth(L) {
        if (len <= 0.0) throw std::invalid_argument("Domain: length must be positive");
        if (L < 1 || L > 30) throw std::invalid_argument("Domain: depth out of range [1,30]");
    }

    std::int64_t cells() const { return std::int64_t(1) << depth; }
    std::int64_t micro_total() const { return 3 * cells(); }        // domain size in u
    double cell_size() const { return length / double(cells()); }
    double micro_size() const { return length / double(micro_total()); }
    double cell_mid(std::int64_t i) const { return (double(i) + 0.5) * cell_size(); }

    bool operator==(const Domain& o) const { return length == o.length && depth == o.depth; }
};

// Half-open interval [lo, hi) in micro units. May extend outside [0, 3N).
struct IntervalU {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t measure() const { return hi > lo ? hi - lo : 0; }
    bool empty() const { return hi <= lo; }
    IntervalU clamp(std::int64_t a, std::int64_t b) const {
        return {lo > a ? lo : a, hi < b ? hi : b};
    }
    bool contains(const IntervalU& o) const { return lo <= o.lo && o.hi <= hi; }
    bool operator==(const IntervalU& o) const { return lo == o.lo && hi == o.hi; }
};

// One cube of a (possibly shifted) dyadic lattice over the domain.
//
// Three lattices (shift 0, 1, 2) realize the one-dimensional three-lattice
// trick: at every level the three lattices' grids sit at offsets
// {0, 1/3, 2/3} of the cube side. Shift 0 is the plain dyadic tree of
// [0, length). For shifts 1 and 2 the offset alternates between s/3 and
// (3-s)/3 of the side from one level to the next; this is the standard
// sign-alternating construction and is what makes each shifted family an
// honest tree (each cube is the disjoint union of its two children).
// Shifted cubes may overhang the domain; indices -1 (and -2 for transient
// children) are allowed so that every lattice covers all of [0, length).
struct DyadicCube {
    int shift = 0;       // 0, 1 or 2
    int level = 0;       // 0 (root scale) .. depth (cells)
    std::int64_t index = 0;

    bool operator==(const DyadicCube& o) const {
        return shift == o.shift && level == o.level && index == o.index;
    }
    // deterministic total order: shift, then level, then index
    bool operator<(const DyadicCube& o) const {
        if (shift != o.shift) return shift < o.shift;
        if (level != o.level) return level < o.level;
        return index < o.index;
    }
};

// grid offset of lattice `shift` at `level`, in thirds of the side
inline int lattice_offset_thirds(int shift, int level) {
    if (shift == 0) return 0;
    return (level % 2 == 0) ? shift : 3 - shift;
}

inline std::int64_t cube_side_u(const Domain& d, const DyadicCube& q) {
    return std::int64_t(3) << (d.depth - q.level);
}

inline std::int64_t cube_left_u(const Domain& d, const DyadicCube& q) {
    const std::int64_t scale = std::int64_t(1) << (d.depth - q.level);
    return (3 * q.index + lattice_offset_thirds(q.shift, q.level)) * scale;
}

inline IntervalU cube_interval(const Domain& d, const DyadicCube& q) {
    const std::int64_t lo = cube_left_u(d, q);
    return {lo, lo + cube_side_u(d, q)};
}

inline double cube_measure(const Domain& d, const DyadicCube& q) {
    return d.length / double(std::int64_t(1) << q.level);
}

// cube of `shift`/`level` whose half-open interval contains micro point x
// (x given in doubled micro units so cell midpoints stay integral)
DyadicCube cube_at_2u(const Domain& d, int shift, int level, std::int64_t x2);

// cube containing the midpoint of cell i
inline DyadicCube cube_at_cell(const Domain& d, int shift, int level, std::int64_t cell) {
    return cube_at_2u(d, shift, level, 6 * cell + 3);
}

// Ordered, deduplicated cube collection (sorted by shift, level, index).
class CubeSet {
  public:
    CubeSet() = default;
    explicit CubeSet(std::vector<DyadicCube> cubes);

    void insert(const DyadicCube& q);
    bool contains(const DyadicCube& q) const;
    std::size_t size() const { return cubes_.size(); }
    bool empty() const { return cubes_.empty(); }
    const std::vector<DyadicCube>& items() const { return cubes_; }
    auto begin() const { return cubes_.begin(); }
    auto end() const { return cubes_.end(); }

  private:
    std::vector<DyadicCube> cubes_;
};

// The two children partitioning q. Throws "leaf cube" at level == depth.
CubeSet children(const Domain& d, const DyadicCube& q);

// Parent cube in the same lattice (level must be > 0).
DyadicCube parent(const Domain& d, const DyadicCube& q);

// All cubes of one lattice at one level that intersect the open domain.
// Shift 0 has 2^level of them, shifts 1 and 2 have 2^level + 1.
std::vector<DyadicCube> lattice_level(const Domain& d, int shift, int level);

// Concentric triple 3Q clamped to the domain, as a micro interval.
IntervalU triple_clamped(const Domain& d, const DyadicCube& q);

// Unclamped concentric triple.
inline IntervalU triple_raw(const Domain& d, const DyadicCube& q) {
    const std::int64_t side = cube_side_u(d, q);
    const std::int64_t lo = cube_left_u(d, q);
    return {lo - side, lo + 2 * side};
}

// Smallest cube of any of the three lattices containing the interval.
// For every micro interval I inside the domain the result R satisfies
// |R| <= 3|I| whenever |I| is at most the domain length; this is checked
// exhaustively in the tests rather than assumed.
DyadicCube containing_triple(const Domain& d, const IntervalU& iv);
inline DyadicCube containing_triple(const Domain& d, const DyadicCube& q) {
    return containing_triple(d, cube_interval(d, q));
}

// Whitney decomposition of an open set given as a cell mask.
//
// Returns pairwise-disjoint shift-0 cubes whose union is exactly the set.
// Cubes are the maximal dyadic ones with dist(Q, complement) > 8 diam(Q),
// where the complement includes the exterior of the domain; cells that
// admit no such cube (they hug the boundary of the set at grid scale) are
// emitted as single-cell cubes and counted in `at_grid_floor`. For the
// non-floor cubes the ratio dist/diam always lies in (8, 17]: maximality
// bounds it above since dist(Q) <= dist(parent) + |Q| <= 17 |Q|.
struct WhitneyResult {
    CubeSet cubes;
    bool no_complement = false;   // input was the whole domain
    std::size_t at_grid_floor = 0;
};
WhitneyResult whitney_decomposition(const Domain& d, const std::vector<bool>& open_cells);

// Sorted union of disjoint micro intervals; supports exact subtraction.
class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(IntervalU base) {
        if (!base.empty()) parts_.push_back(base);
    }
    void subtract(const IntervalU& cut);
    // remove and return the leftmost `amount` of measure (throws if short)
    IntervalSet take_left(std::int64_t amount);
    std::int64_t measure() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<IntervalU>& parts() const { return parts_; }

  private:
    std::vector<IntervalU> parts_;
};

} // namespace sparselab

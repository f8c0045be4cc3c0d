#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace mvfp {

// A point is an index into the universe of its MetricSpace.
struct Point {
    int index = 0;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

// Nonempty finite subset of a universe, kept sorted and deduplicated.
// Construction rejects an empty member list; every other operation can
// then rely on nonemptiness.
class PointSet {
public:
    explicit PointSet(std::vector<Point> members);

    const std::vector<Point>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Point p) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> members_;
};

enum class SpaceMode { FiniteMatrix, Grid1d };

struct GridSpec {
    double origin = 0.0;
    double step = 1.0;
    int count = 1;
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Finitely represented metric space: either an explicit distance matrix
// over named points, or a uniform 1-D grid (distances derived as
// step * |i - j|).
//
// Construction checks structure only (square, finite, nonnegative, labels
// distinct); metric axioms are checked by validate_metric so that broken
// inputs can be loaded and reported rather than rejected opaquely.
class MetricSpace {
public:
    // labels name the points for I/O; default is 0..n-1.
    static MetricSpace from_matrix(std::vector<std::vector<double>> matrix,
                                   std::vector<double> labels = {});
    // 1-D embedding shorthand: d(i,j) = |c_i - c_j|, labels = coordinates.
    // Coordinates are sorted ascending; duplicates are rejected.
    static MetricSpace from_coordinates(std::vector<double> coords);
    static MetricSpace grid(double origin, double step, int count);

    SpaceMode mode() const { return mode_; }
    int size() const { return size_; }
    double distance(Point a, Point b) const;
    double label(Point p) const;
    // True when distances were derived from coordinates (grid or 1-D
    // embedding); validation then compares with a small relative
    // tolerance instead of exactly.
    bool derived_entries() const { return derived_; }

    std::vector<Point> points() const;
    // Finds the point whose label matches `value` within a relative
    // tolerance; nullopt when nothing is close enough.
    std::optional<Point> point_with_label(double value, double rel_tol = 1e-9) const;
    const std::optional<GridSpec>& grid_spec() const { return grid_; }
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }

    friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

private:
    MetricSpace() = default;

    SpaceMode mode_ = SpaceMode::FiniteMatrix;
    int size_ = 0;
    bool derived_ = false;
    std::vector<double> labels_;
    std::vector<std::vector<double>> matrix_; // empty in grid mode
    std::optional<GridSpec> grid_;
};

struct ValidationReport {
    bool valid = true;
    std::string detail; // first violation, human readable; empty when valid
};

// d(x, y). Throws std::invalid_argument for out-of-range points.
double distance(const MetricSpace& space, Point x, Point y);

// d(x, A) = min over members. A is nonempty by construction.
double point_set_distance(const MetricSpace& space, Point x, const PointSet& a);

// Hausdorff distance between two nonempty finite sets:
// max(sup_{a in A} d(a,B), sup_{b in B} d(b,A)).
double hausdorff(const MetricSpace& space, const PointSet& a, const PointSet& b);

// Member of `a` nearest to x; ties broken by lowest index.
Point nearest_member(const MetricSpace& space, Point x, const PointSet& a);

// Checks all metric axioms (zero diagonal, symmetry, off-diagonal
// positivity, triangle inequality over all ordered triples). Exact
// comparisons on user-supplied matrices; relative tolerance 1e-12 on
// derived entries to absorb float round-off.
ValidationReport validate_metric(const MetricSpace& space);

} // namespace mvfp

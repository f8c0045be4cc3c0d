#include "mvfp/metric.hpp"

#include "mvfp/text.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mvfp {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

double relative_scale(double a, double b, double c) {
    return std::max({std::fabs(a), std::fabs(b), std::fabs(c), 1.0});
}

} // namespace

PointSet::PointSet(std::vector<Point> members) : members_(std::move(members)) {
    require(!members_.empty(), "point set must be nonempty");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    require(members_.front().index >= 0, "point set contains a negative index");
}

bool PointSet::contains(Point p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

MetricSpace MetricSpace::from_matrix(std::vector<std::vector<double>> matrix,
                                     std::vector<double> labels) {
    const auto n = matrix.size();
    require(n > 0, "distance matrix must be nonempty");
    for (const auto& row : matrix) {
        require(row.size() == n, "distance matrix must be square");
        for (double v : row) require(std::isfinite(v), "distance entries must be finite");
    }
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<double>(i);
    }
    require(labels.size() == n, "label count must match matrix size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            require(labels[i] != labels[j], "point labels must be distinct");

    MetricSpace s;
    s.mode_ = SpaceMode::FiniteMatrix;
    s.size_ = static_cast<int>(n);
    s.derived_ = false;
    s.labels_ = std::move(labels);
    s.matrix_ = std::move(matrix);
    return s;
}

MetricSpace MetricSpace::from_coordinates(std::vector<double> coords) {
    require(!coords.empty(), "coordinate list must be nonempty");
    for (double c : coords) require(std::isfinite(c), "coordinates must be finite");
    std::sort(coords.begin(), coords.end());
    for (std::size_t i = 0; i + 1 < coords.size(); ++i)
        require(coords[i] != coords[i + 1], "coordinates must be distinct");

    const auto n = coords.size();
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            matrix[i][j] = std::fabs(coords[i] - coords[j]);

    MetricSpace s;
    s.mode_ = SpaceMode::FiniteMatrix;
    s.size_ = static_cast<int>(n);
    s.derived_ = true;
    s.labels_ = std::move(coords);
    s.matrix_ = std::move(matrix);
    return s;
}

MetricSpace MetricSpace::grid(double origin, double step, int count) {
    require(std::isfinite(origin) && std::isfinite(step), "grid parameters must be finite");
    require(step > 0.0, "grid step must be positive");
    require(count >= 1, "grid must have at least one point");

    MetricSpace s;
    s.mode_ = SpaceMode::Grid1d;
    s.size_ = count;
    s.derived_ = true;
    s.grid_ = GridSpec{origin, step, count};
    return s;
}

double MetricSpace::distance(Point a, Point b) const {
    require(a.index >= 0 && a.index < size_ && b.index >= 0 && b.index < size_,
            "point index out of range");
    if (mode_ == SpaceMode::Grid1d)
        return grid_->step * std::abs(a.index - b.index);
    return matrix_[static_cast<std::size_t>(a.index)][static_cast<std::size_t>(b.index)];
}

double MetricSpace::label(Point p) const {
    require(p.index >= 0 && p.index < size_, "point index out of range");
    if (mode_ == SpaceMode::Grid1d)
        return grid_->origin + grid_->step * p.index;
    return labels_[static_cast<std::size_t>(p.index)];
}

std::vector<Point> MetricSpace::points() const {
    std::vector<Point> out(static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i) out[static_cast<std::size_t>(i)] = Point{i};
    return out;
}

std::optional<Point> MetricSpace::point_with_label(double value, double rel_tol) const {
    int best = -1;
    double best_err = 0.0;
    for (int i = 0; i < size_; ++i) {
        const double err = std::fabs(label(Point{i}) - value);
        if (best < 0 || err < best_err) {
            best = i;
            best_err = err;
        }
    }
    const double scale = std::max({std::fabs(value), std::fabs(label(Point{best})), 1.0});
    if (best_err <= rel_tol * scale) return Point{best};
    return std::nullopt;
}

double distance(const MetricSpace& space, Point x, Point y) {
    return space.distance(x, y);
}

double point_set_distance(const MetricSpace& space, Point x, const PointSet& a) {
    double best = space.distance(x, a.members().front());
    for (std::size_t i = 1; i < a.members().size(); ++i)
        best = std::min(best, space.distance(x, a.members()[i]));
    return best;
}

double hausdorff(const MetricSpace& space, const PointSet& a, const PointSet& b) {
    double worst = 0.0;
    for (Point p : a.members()) worst = std::max(worst, point_set_distance(space, p, b));
    for (Point q : b.members()) worst = std::max(worst, point_set_distance(space, q, a));
    return worst;
}

Point nearest_member(const MetricSpace& space, Point x, const PointSet& a) {
    Point best = a.members().front();
    double best_d = space.distance(x, best);
    for (std::size_t i = 1; i < a.members().size(); ++i) {
        const double d = space.distance(x, a.members()[i]);
        if (d < best_d) { // strict: ties keep the lowest index (members sorted)
            best = a.members()[i];
            best_d = d;
        }
    }
    return best;
}

ValidationReport validate_metric(const MetricSpace& space) {
    const int n = space.size();
    const bool tolerant = space.derived_entries();
    const double rel = 1e-12;
    auto name = [&](int i) { return format_number(space.label(Point{i})); };

    for (int i = 0; i < n; ++i) {
        if (space.distance(Point{i}, Point{i}) != 0.0)
            return {false, "d(" + name(i) + "," + name(i) + ") must be 0"};
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double dij = space.distance(Point{i}, Point{j});
            const double dji = space.distance(Point{j}, Point{i});
            if (dij <= 0.0)
                return {false, "d(" + name(i) + "," + name(j) + ") = " + format_number(dij) +
                                   " must be positive"};
            if (dij != dji)
                return {false, "asymmetry: d(" + name(i) + "," + name(j) + ") = " +
                                   format_number(dij) + " but d(" + name(j) + "," + name(i) +
                                   ") = " + format_number(dji)};
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const double dik = space.distance(Point{i}, Point{k});
                const double dij = space.distance(Point{i}, Point{j});
                const double djk = space.distance(Point{j}, Point{k});
                const double slack = tolerant ? rel * relative_scale(dik, dij, djk) : 0.0;
                if (dik > dij + djk + slack) {
                    std::ostringstream msg;
                    msg << "triangle violation: d(" << name(i) << "," << name(k) << ") = "
                        << format_number(dik) << " > " << format_number(dij) << " + "
                        << format_number(djk) << " via " << name(j);
                    return {false, msg.str()};
                }
            }
        }
    }
    return {true, ""};
}

} // namespace mvfp

#pragma once

#include "mvfp/metric.hpp"

#include <vector>

namespace mvfp {

// Total map from every point of a universe to a nonempty subset of the
// same universe. Images are PointSets, so closedness and boundedness are
// automatic on a finite space.
class MultiMap {
public:
    MultiMap(int universe_size, std::vector<PointSet> images);

    const PointSet& image(Point x) const;
    int universe_size() const { return universe_size_; }

    static MultiMap identity(const MetricSpace& space);
    // Every point maps to the same singleton {target}.
    static MultiMap constant(const MetricSpace& space, Point target);

    friend bool operator==(const MultiMap&, const MultiMap&) = default;

private:
    int universe_size_ = 0;
    std::vector<PointSet> images_;
};

} // namespace mvfp

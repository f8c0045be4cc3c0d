#include "mvfp/multimap.hpp"

#include <stdexcept>
#include <utility>

namespace mvfp {

MultiMap::MultiMap(int universe_size, std::vector<PointSet> images)
    : universe_size_(universe_size), images_(std::move(images)) {
    if (universe_size_ <= 0)
        throw std::invalid_argument("multimap universe must be nonempty");
    if (static_cast<int>(images_.size()) != universe_size_)
        throw std::invalid_argument("multimap must define an image for every point");
    for (const PointSet& image : images_) {
        if (image.members().back().index >= universe_size_)
            throw std::invalid_argument("multimap image leaves the universe");
    }
}

const PointSet& MultiMap::image(Point x) const {
    if (x.index < 0 || x.index >= universe_size_)
        throw std::invalid_argument("point index out of range");
    return images_[static_cast<std::size_t>(x.index)];
}

MultiMap MultiMap::identity(const MetricSpace& space) {
    std::vector<PointSet> images;
    images.reserve(static_cast<std::size_t>(space.size()));
    for (int i = 0; i < space.size(); ++i) images.emplace_back(std::vector<Point>{Point{i}});
    return {space.size(), std::move(images)};
}

MultiMap MultiMap::constant(const MetricSpace& space, Point target) {
    if (target.index < 0 || target.index >= space.size())
        throw std::invalid_argument("point index out of range");
    std::vector<PointSet> images;
    images.reserve(static_cast<std::size_t>(space.size()));
    for (int i = 0; i < space.size(); ++i) images.emplace_back(std::vector<Point>{target});
    return {space.size(), std::move(images)};
}

} // namespace mvfp

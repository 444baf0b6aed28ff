#include "pathint/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathint {

TimeGrid::TimeGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw std::invalid_argument("TimeGrid: need at least 2 points");
    if (points_.front() != 0.0) throw std::invalid_argument("TimeGrid: first point must be 0");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (!(points_[i] < points_[i + 1]))
            throw std::invalid_argument("TimeGrid: points must be strictly increasing");
    }
    if (!(points_.back() > 0.0) || !std::isfinite(points_.back()))
        throw std::invalid_argument("TimeGrid: t_max must be positive and finite");
}

TimeGrid TimeGrid::equidistant(double t_max, std::size_t n_points) {
    if (n_points < 2) throw std::invalid_argument("TimeGrid: need at least 2 points");
    if (!(t_max > 0.0)) throw std::invalid_argument("TimeGrid: t_max must be positive");
    std::vector<double> pts(n_points);
    const std::size_t cells = n_points - 1;
    for (std::size_t i = 0; i < n_points; ++i)
        pts[i] = t_max * static_cast<double>(i) / static_cast<double>(cells);
    pts.front() = 0.0;
    pts.back() = t_max;
    return TimeGrid(std::move(pts));
}

TimeGrid TimeGrid::standard(double t_max) { return equidistant(t_max, (1u << 14) + 1); }

std::optional<std::size_t> TimeGrid::index_at_time(double t, double rtol) const {
    const double tol = rtol * t_max();
    auto it = std::lower_bound(points_.begin(), points_.end(), t - tol);
    if (it == points_.end()) return std::nullopt;
    if (std::abs(*it - t) <= tol) return static_cast<std::size_t>(it - points_.begin());
    return std::nullopt;
}

std::size_t TimeGrid::floor_index(double t) const {
    if (t <= points_.front()) return 0;
    if (t >= points_.back()) return points_.size() - 1;
    auto it = std::upper_bound(points_.begin(), points_.end(), t);
    return static_cast<std::size_t>(it - points_.begin()) - 1;
}

bool same_grid(const GridPtr& a, const GridPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace pathint

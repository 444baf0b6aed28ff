#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace pathint {

/// Sampling grid on [0, T]: strictly increasing times, points.front() == 0,
/// points.back() == t_max. Grids may be non-uniform; partitions always refer
/// to grid indices, never to off-grid times.
class TimeGrid {
public:
    /// Takes ownership of an explicit point set. Throws std::invalid_argument
    /// if the points are not strictly increasing, do not start at 0, or have
    /// fewer than 2 entries.
    explicit TimeGrid(std::vector<double> points);

    /// Equidistant grid with n_points samples of [0, t_max].
    static TimeGrid equidistant(double t_max, std::size_t n_points);

    /// Default desk-scale grid: 2^14 + 1 equidistant points.
    static TimeGrid standard(double t_max = 1.0);

    double t_max() const { return points_.back(); }
    std::size_t size() const { return points_.size(); }
    std::size_t cells() const { return points_.size() - 1; }
    double time(std::size_t i) const { return points_.at(i); }
    double operator[](std::size_t i) const { return points_[i]; }
    const std::vector<double>& points() const { return points_; }

    double dt(std::size_t i) const { return points_.at(i + 1) - points_.at(i); }

    /// Exact-match lookup of a time (relative tolerance on t_max).
    std::optional<std::size_t> index_at_time(double t, double rtol = 1e-12) const;

    /// Largest grid index whose time is <= t (clamped to the grid range).
    std::size_t floor_index(double t) const;

    bool operator==(const TimeGrid& other) const { return points_ == other.points_; }

private:
    std::vector<double> points_;
};

using GridPtr = std::shared_ptr<const TimeGrid>;

inline GridPtr share(TimeGrid grid) { return std::make_shared<const TimeGrid>(std::move(grid)); }

/// Two series live on the same grid if they share the pointer or the points agree.
bool same_grid(const GridPtr& a, const GridPtr& b);

}  // namespace pathint

#pragma once

#include <span>
#include <string>
#include <vector>

#include "pathint/grid.hpp"
#include "pathint/path.hpp"

namespace pathint {

/// Time series of rows x cols matrices on the full grid; value at t = 0 is
/// zero for every running quantity in this library. Vector-valued series use
/// cols = 1; tensor-valued series are square (rows == cols == d).
class RunningIntegral {
public:
    RunningIntegral(GridPtr grid, int rows, int cols);
    RunningIntegral(GridPtr grid, int rows, int cols, std::vector<double> values);

    const GridPtr& grid_ptr() const { return grid_; }
    const TimeGrid& grid() const { return *grid_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t entry_count() const { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }
    std::size_t length() const { return grid_->size(); }

    std::span<double> at(std::size_t i) {
        return {values_.data() + i * entry_count(), entry_count()};
    }
    std::span<const double> at(std::size_t i) const {
        return {values_.data() + i * entry_count(), entry_count()};
    }

    /// Square series only: value at grid index i as a Tensor.
    Tensor tensor_at(std::size_t i) const;

    std::span<const double> at_end() const { return at(length() - 1); }

    const std::vector<double>& raw() const { return values_; }
    std::vector<double>& raw() { return values_; }

private:
    GridPtr grid_;
    int rows_;
    int cols_;
    std::vector<double> values_;
};

/// A tensor path is simply a square matrix series on the grid.
using TensorPath = RunningIntegral;

/// Sup over grid points of the entrywise max-abs difference.
/// Throws std::invalid_argument on grid or shape mismatch.
double uniform_distance(const RunningIntegral& f, const RunningIntegral& g);

/// Sup over grid points of the entrywise max-abs value.
double sup_norm(const RunningIntegral& f);

/// Cauchy-in-n diagnostics for a ladder of running integrals.
struct ConvergenceReport {
    struct Entry {
        int level = 0;
        std::size_t cells = 0;
        double sup_diff_prev = 0.0;  // 0 for the first level
        std::vector<double> value_at_end;
    };
    std::vector<Entry> entries;
    double tol = 0.0;
    bool converged = false;
};

/// converged iff the final sup-distance is below tol_rel * sup-norm of the
/// last level (floor 1) and the last two distances are non-increasing.
/// Requires at least two levels.
ConvergenceReport cauchy_report(const std::vector<RunningIntegral>& levels,
                                const std::vector<std::size_t>& cells,
                                const std::vector<int>& level_ids, double tol_rel = 1e-3);

}  // namespace pathint

#include "pathint/running_integral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathint {

RunningIntegral::RunningIntegral(GridPtr grid, int rows, int cols)
    : grid_(std::move(grid)), rows_(rows), cols_(cols) {
    if (!grid_) throw std::invalid_argument("RunningIntegral: null grid");
    if (rows_ <= 0 || cols_ <= 0) throw std::invalid_argument("RunningIntegral: bad shape");
    values_.assign(grid_->size() * entry_count(), 0.0);
}

RunningIntegral::RunningIntegral(GridPtr grid, int rows, int cols, std::vector<double> values)
    : grid_(std::move(grid)), rows_(rows), cols_(cols), values_(std::move(values)) {
    if (!grid_) throw std::invalid_argument("RunningIntegral: null grid");
    if (rows_ <= 0 || cols_ <= 0) throw std::invalid_argument("RunningIntegral: bad shape");
    if (values_.size() != grid_->size() * entry_count())
        throw std::invalid_argument("RunningIntegral: value count mismatch");
}

Tensor RunningIntegral::tensor_at(std::size_t i) const {
    if (rows_ != cols_) throw std::logic_error("RunningIntegral: tensor_at on non-square series");
    Tensor t(rows_);
    auto v = at(i);
    std::copy(v.begin(), v.end(), t.e.begin());
    return t;
}

double uniform_distance(const RunningIntegral& f, const RunningIntegral& g) {
    if (!same_grid(f.grid_ptr(), g.grid_ptr()))
        throw std::invalid_argument("uniform_distance: grid mismatch");
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw std::invalid_argument("uniform_distance: shape mismatch");
    double m = 0.0;
    const auto& a = f.raw();
    const auto& b = g.raw();
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

double sup_norm(const RunningIntegral& f) {
    double m = 0.0;
    for (double v : f.raw()) m = std::max(m, std::abs(v));
    return m;
}

ConvergenceReport cauchy_report(const std::vector<RunningIntegral>& levels,
                                const std::vector<std::size_t>& cells,
                                const std::vector<int>& level_ids, double tol_rel) {
    if (levels.size() < 2) throw std::invalid_argument("cauchy_report: need at least 2 levels");
    if (cells.size() != levels.size() || level_ids.size() != levels.size())
        throw std::invalid_argument("cauchy_report: label count mismatch");

    ConvergenceReport rep;
    rep.entries.resize(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        auto& e = rep.entries[k];
        e.level = level_ids[k];
        e.cells = cells[k];
        e.sup_diff_prev = k == 0 ? 0.0 : uniform_distance(levels[k], levels[k - 1]);
        auto last = levels[k].at_end();
        e.value_at_end.assign(last.begin(), last.end());
    }
    rep.tol = tol_rel * std::max(1.0, sup_norm(levels.back()));
    const double d_last = rep.entries.back().sup_diff_prev;
    const double d_prev = rep.entries[rep.entries.size() - 2].sup_diff_prev;
    const bool monotone_tail = levels.size() == 2 || d_last <= d_prev;
    rep.converged = d_last < rep.tol && monotone_tail;
    return rep;
}

}  // namespace pathint

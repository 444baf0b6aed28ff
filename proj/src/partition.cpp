#include "pathint/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pathint {

Partition::Partition(GridPtr grid, std::vector<std::size_t> indices)
    : grid_(std::move(grid)), idx_(std::move(indices)) {
    if (!grid_) throw std::invalid_argument("Partition: null grid");
    if (idx_.size() < 2) throw std::invalid_argument("Partition: need at least the two endpoints");
    if (idx_.front() != 0 || idx_.back() != grid_->size() - 1)
        throw std::invalid_argument("Partition: endpoints must be the grid endpoints");
    for (std::size_t k = 0; k + 1 < idx_.size(); ++k)
        if (!(idx_[k] < idx_[k + 1]))
            throw std::invalid_argument("Partition: indices must be strictly increasing");
}

double Partition::mesh() const {
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < idx_.size(); ++k)
        m = std::max(m, grid_->time(idx_[k + 1]) - grid_->time(idx_[k]));
    return m;
}

namespace {

Partition uniform_partition(const GridPtr& grid, std::size_t n_cells, const char* what) {
    std::vector<std::size_t> idx(n_cells + 1);
    const double t_max = grid->t_max();
    // Fast path on equidistant grids: exact index arithmetic when divisible.
    if (grid->cells() % n_cells == 0) {
        const std::size_t step = grid->cells() / n_cells;
        bool uniform = true;
        const double dt0 = grid->dt(0);
        for (std::size_t i = 1; i < grid->cells() && uniform; i += std::max<std::size_t>(grid->cells() / 64, 1))
            uniform = std::abs(grid->dt(i) - dt0) <= 1e-12 * t_max;
        if (uniform) {
            for (std::size_t k = 0; k <= n_cells; ++k) idx[k] = k * step;
            return Partition(grid, std::move(idx));
        }
    }
    for (std::size_t k = 0; k <= n_cells; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(n_cells);
        auto at = grid->index_at_time(t);
        if (!at)
            throw std::invalid_argument(std::string(what) + ": point " + std::to_string(t) +
                                        " is not a grid point");
        idx[k] = *at;
    }
    return Partition(grid, std::move(idx));
}

}  // namespace

PartitionSequence dyadic_sequence(GridPtr grid, int n_max) {
    if (n_max < 1) throw std::invalid_argument("dyadic_sequence: n_max must be >= 1");
    PartitionSequence seq;
    seq.grid = grid;
    for (int n = 1; n <= n_max; ++n) {
        seq.levels.push_back(uniform_partition(grid, std::size_t{1} << n, "dyadic_sequence"));
        seq.level_ids.push_back(n);
    }
    return seq;
}

PartitionSequence equidistant_sequence(GridPtr grid, const std::vector<std::size_t>& counts) {
    if (counts.empty()) throw std::invalid_argument("equidistant_sequence: no counts given");
    PartitionSequence seq;
    seq.grid = grid;
    int id = 1;
    for (std::size_t n : counts) {
        if (n == 0) throw std::invalid_argument("equidistant_sequence: count must be positive");
        seq.levels.push_back(uniform_partition(grid, n, "equidistant_sequence"));
        seq.level_ids.push_back(id++);
    }
    return seq;
}

Partition lebesgue_partition(const SamplePath& path, int n) {
    const TimeGrid& grid = path.grid();
    const double threshold = std::pow(2.0, -n);
    std::vector<std::size_t> idx{0};
    std::size_t anchor = 0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double trigger = (grid.time(i) - grid.time(anchor)) + increment_norm(path, anchor, i);
        if (trigger >= threshold) {
            idx.push_back(i);
            anchor = i;
        }
    }
    idx.push_back(grid.size() - 1);
    return Partition(path.grid_ptr(), std::move(idx));
}

PartitionSequence lebesgue_sequence(const SamplePath& path, int n_min, int n_max) {
    if (n_min > n_max) throw std::invalid_argument("lebesgue_sequence: empty level range");
    PartitionSequence seq;
    seq.grid = path.grid_ptr();
    for (int n = n_min; n <= n_max; ++n) {
        seq.levels.push_back(lebesgue_partition(path, n));
        seq.level_ids.push_back(n);
    }
    return seq;
}

ReindexedSequence sub_super_sequence(const PartitionSequence& seq, const std::vector<std::size_t>& map,
                                     SequenceSide side) {
    if (map.empty()) throw std::invalid_argument("sub_super_sequence: empty map");
    for (std::size_t k = 0; k < map.size(); ++k) {
        if (map[k] >= seq.size()) throw std::invalid_argument("sub_super_sequence: map exceeds levels");
        if (k > 0 && map[k] < map[k - 1])
            throw std::invalid_argument("sub_super_sequence: map must be non-decreasing");
        if (side == SequenceSide::sub && map[k] < k)
            throw std::invalid_argument("sub_super_sequence: sub-sequence requires k <= map[k]");
        if (side == SequenceSide::super && map[k] > k)
            throw std::invalid_argument("sub_super_sequence: super-sequence requires map[k] <= k");
    }
    ReindexedSequence out;
    out.sequence.grid = seq.grid;
    for (std::size_t k = 0; k < map.size(); ++k) {
        out.sequence.levels.push_back(seq.levels[map[k]]);
        out.sequence.level_ids.push_back(seq.level_ids[map[k]]);
    }
    out.stalled = map.size() >= 2 && map[map.size() - 1] == map[map.size() - 2];
    return out;
}

SequenceValidation validate_sequence(const PartitionSequence& seq, const SamplePath& path,
                                     double tol_factor) {
    if (!same_grid(seq.grid, path.grid_ptr()))
        throw std::invalid_argument("validate_sequence: grid mismatch");
    SequenceValidation v;
    double cell_osc = 0.0;
    for (std::size_t i = 0; i + 1 < path.length(); ++i)
        cell_osc = std::max(cell_osc, increment_norm(path, i, i + 1));
    v.tol = tol_factor * cell_osc;

    for (const Partition& part : seq.levels) {
        double osc = 0.0;
        for (std::size_t k = 0; k + 1 < part.points(); ++k)
            osc = std::max(osc, increment_norm(path, part.grid_index(k), part.grid_index(k + 1)));
        v.oscillation.push_back(osc);
        v.mesh.push_back(part.mesh());
    }
    v.oscillation_vanishing = v.oscillation.back() <= v.tol;
    v.oscillation_monotone = true;
    for (std::size_t k = 0; k + 1 < v.oscillation.size(); ++k)
        if (v.oscillation[k + 1] > v.oscillation[k] + 1e-12)
            v.oscillation_monotone = false;

    double grid_mesh = 0.0;
    for (std::size_t i = 0; i + 1 < path.length(); ++i)
        grid_mesh = std::max(grid_mesh, path.grid().dt(i));
    v.mesh_vanishing = v.mesh.back() <= tol_factor * grid_mesh;
    return v;
}

}  // namespace pathint

#pragma once

#include <cstdint>
#include <vector>

#include "pathint/grid.hpp"
#include "pathint/path.hpp"

namespace pathint {

/// Partition of [0, T] as a strictly increasing set of grid indices, pinned
/// at both endpoints of the grid.
class Partition {
public:
    Partition(GridPtr grid, std::vector<std::size_t> indices);

    const GridPtr& grid_ptr() const { return grid_; }
    const std::vector<std::size_t>& indices() const { return idx_; }
    std::size_t points() const { return idx_.size(); }
    std::size_t cells() const { return idx_.size() - 1; }
    std::size_t grid_index(std::size_t k) const { return idx_.at(k); }
    double time(std::size_t k) const { return grid_->time(idx_.at(k)); }

    double mesh() const;

private:
    GridPtr grid_;
    std::vector<std::size_t> idx_;
};

/// Ordered family of partitions of the same grid, coarse to fine. level_id
/// carries the semantic level number (dyadic exponent, count index, stopping
/// threshold exponent) used in reports.
struct PartitionSequence {
    GridPtr grid;
    std::vector<Partition> levels;
    std::vector<int> level_ids;

    std::size_t size() const { return levels.size(); }
    const Partition& level(std::size_t k) const { return levels.at(k); }
    const Partition& finest() const { return levels.back(); }
};

/// Dyadic levels n = 1..n_max: points k T 2^{-n}. Every dyadic point must be
/// a grid point; throws std::invalid_argument otherwise.
PartitionSequence dyadic_sequence(GridPtr grid, int n_max);

/// One level per entry of counts: N+1 equally spaced points. Each point must
/// land on the grid (on an equidistant grid this is the usual divisibility
/// condition); throws std::invalid_argument otherwise.
PartitionSequence equidistant_sequence(GridPtr grid, const std::vector<std::size_t>& counts);

/// Path-driven stopping rule: tau_0 = 0 and tau_k is the first grid time with
/// |t - tau_{k-1}| + |X_t - X_{tau_{k-1}}| >= 2^{-n}, capped at T. A threshold
/// below the grid resolution simply degenerates toward the full grid.
Partition lebesgue_partition(const SamplePath& path, int n);

PartitionSequence lebesgue_sequence(const SamplePath& path, int n_min, int n_max);

enum class SequenceSide { sub, super };

struct ReindexedSequence {
    PartitionSequence sequence;
    bool stalled = false;  // level map stopped increasing at the tail
};

/// Reindex levels[k] -> levels[map[k]] (positions into seq.levels). map must
/// be non-decreasing; the declared side is enforced: sub needs k <= map[k],
/// super needs map[k] <= k. A map that stalls at the tail is legal for the
/// super side but flagged, since it cannot exhaust the underlying sequence.
ReindexedSequence sub_super_sequence(const PartitionSequence& seq, const std::vector<std::size_t>& map,
                                     SequenceSide side);

/// Per-level diagnostics of a partition sequence against a reference path.
/// oscillation[k] = sup over cells of |X-increment| at level k.
struct SequenceValidation {
    std::vector<double> oscillation;
    std::vector<double> mesh;
    double tol = 0.0;             // 10x the max grid-cell oscillation by default
    bool oscillation_vanishing = false;   // final level oscillation below tol
    bool oscillation_monotone = false;    // non-increasing across levels
    bool mesh_vanishing = false;          // final level time mesh below 10x grid mesh
    bool ok() const { return oscillation_vanishing && oscillation_monotone; }
};

SequenceValidation validate_sequence(const PartitionSequence& seq, const SamplePath& path,
                                     double tol_factor = 10.0);

}  // namespace pathint

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pathint/partition.hpp"
#include "pathint/path.hpp"

namespace pathint {

/// Superadditive non-negative function on grid index pairs (s <= t) with
/// c(t, t) = 0. Evaluated through a closure so callers can plug in custom
/// controls; the kind tag tells reports (and fast paths) what is behind it.
struct ControlFunction {
    enum class Kind { pvar, hoelder, custom };

    Kind kind = Kind::custom;
    double p = 0.0;  // pvar exponent when kind == pvar
    std::function<double(std::size_t, std::size_t)> eval;
    // Set for pvar controls; enables prefix-profile sweeps instead of
    // per-pair window DPs.
    std::shared_ptr<const SamplePath> source;

    std::string describe() const;
};

/// c(s, t) = (p-variation of X over [s, t])^p. Superadditive by refinement of
/// optimal partitions and dominates |X_{s,t}|^p with ratio <= 1. Each
/// evaluation runs the O(W^2) window DP.
ControlFunction control_from_pvar(const SamplePath& path, double p);

/// c(s, t) = K |t - s|^exponent with exponent >= 1 (superadditivity needs the
/// exponent at least 1). Suitable for smooth fixtures; O(1) per evaluation.
ControlFunction hoelder_control(GridPtr grid, double k_const, double exponent);

ControlFunction custom_control(std::function<double(std::size_t, std::size_t)> eval);

/// Randomized audit: max over sampled grid triples s <= u <= t of
/// c(s,u) + c(u,t) - c(s,t). Non-positive (up to rounding) for a genuine
/// control function.
double superadditivity_defect(const ControlFunction& c, std::size_t grid_size, int samples,
                              std::uint64_t seed);

struct BalancedRatioReport {
    std::vector<double> per_level;  // sup_i c(cell_i) / inf_i c(cell_i); +inf when inf == 0
    double overall = 0.0;
};

/// Max/min ratio of per-cell control values, per level and overall. Infinite
/// ratios are reported, never thrown.
BalancedRatioReport c_balanced_ratio(const PartitionSequence& seq, const ControlFunction& c);

}  // namespace pathint

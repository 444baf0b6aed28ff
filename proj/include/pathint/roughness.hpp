#pragma once

#include <optional>
#include <vector>

#include "pathint/control.hpp"
#include "pathint/partition.hpp"
#include "pathint/path.hpp"

namespace pathint {

/// Smallest dyadic level l with N^{p+epsilon} <= 2^l, i.e.
/// ceil((p + epsilon) log2 N), floored at 1.
int dyadic_alignment_level(std::size_t n_cells, double p, double epsilon);

struct RoughnessConfig {
    double p = 2.5;
    double epsilon = 0.1;
    PartitionSequence reference;  // dyadic levels, ids = dyadic exponents
    PartitionSequence candidate;
    ControlFunction control;
};

struct AlignedReference {
    PartitionSequence aligned;           // one reference level per candidate level
    std::vector<int> levels;             // chosen dyadic exponents
    std::vector<double> cond_i_ratio;    // N(candidate)^p / N(aligned)
    std::vector<bool> level_truncated;   // requested level exceeded the grid resolution
    bool identity = false;               // candidate already dominated by the level-for-level map
    bool truncated = false;              // any level truncated
};

/// Pick the reference level per candidate level: the identity map when
/// N(candidate_n)^{p+eps} <= N(reference_n) holds at every level, otherwise
/// the alignment formula, clamped to the deepest available reference level
/// (clamping sets the truncated flag, it is not an error).
AlignedReference align_reference(const RoughnessConfig& cfg);

/// Cross-increment statistic: bucket the fine partition's increments by the
/// cells (t_k, t_{k+1}] of the coarse partition and sum, per bucket, all
/// off-diagonal products delta_i (x) delta_{i'}. Computed in O(N(ref)) as
/// (sum delta)(x)(sum delta) - sum delta (x) delta per bucket. Values are
/// clamped at time t (snapped down to the grid).
Tensor quadratic_roughness_stat(const SamplePath& x, const Partition& coarse, const Partition& ref,
                                double t);

/// Alternating-sign cross-area statistic minus its aligned one-index
/// baseline. Per bucket the inner index range keeps an odd number of points:
/// with an even count of ref points in the bucket, the last one is dropped.
/// The range may include the final partition point, whose cell degenerates
/// (virtual successor clamped to T).
Tensor levy_roughness_stat(const SamplePath& x, const Partition& coarse, const Partition& ref,
                           double t);

struct RoughnessLevelStat {
    int level = 0;
    std::size_t candidate_cells = 0;
    std::size_t reference_cells = 0;
    double t = 0.0;
    Tensor quadratic;
    Tensor levy;
    double cond_i_ratio = 0.0;
    bool truncated = false;
};

struct RoughnessSide {
    std::vector<RoughnessLevelStat> stats;  // per level, at t = T
    double quad_slope = 0.0;   // least-squares slope of log10 |stat| over the last 3 levels
    double levy_slope = 0.0;
    bool quad_decaying = false;  // slope < 0 and final magnitude < tol
    bool levy_decaying = false;
    double c_balanced_ratio = 0.0;  // of the aligned reference under the time control
    bool identity_alignment = false;
    bool any_truncated = false;
};

/// Both roughness statistics of one candidate sequence against its aligned
/// dyadic reference; the reference levels are probed from the grid (deepest
/// embeddable dyadic level). Statistics are evaluated at t = T per level.
RoughnessSide roughness_analysis(const SamplePath& x, const PartitionSequence& candidate, double p,
                                 double epsilon = 0.1, double decay_tol = 0.05);

struct InvarianceReport {
    double p = 0.0;
    double epsilon = 0.0;
    double decay_tol = 0.0;
    double qv_sup_diff = 0.0;    // sup_t |QV_a - QV_b| at the top levels
    double levy_sup_diff = 0.0;  // sup_t |L_a - L_b|
    double qv_diff_at_end = 0.0;
    double levy_diff_at_end = 0.0;
    RoughnessSide side_a;
    RoughnessSide side_b;
};

/// Juxtaposes "brackets/areas close" with "roughness statistics small": the
/// top-level quadratic-variation and Levy-area discrepancies between the two
/// sequences, and both roughness statistics of each candidate against its
/// aligned dyadic reference (reference levels probed from the grid).
InvarianceReport invariance_experiment(const SamplePath& x, const PartitionSequence& seq_a,
                                       const PartitionSequence& seq_b, double p,
                                       double epsilon = 0.1, double decay_tol = 0.05);

}  // namespace pathint

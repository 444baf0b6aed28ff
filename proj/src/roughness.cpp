#include "pathint/roughness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathint/riemann.hpp"

namespace pathint {

int dyadic_alignment_level(std::size_t n_cells, double p, double epsilon) {
    if (n_cells == 0) throw std::invalid_argument("dyadic_alignment_level: empty partition");
    const double need = (p + epsilon) * std::log2(static_cast<double>(n_cells));
    return std::max(1, static_cast<int>(std::ceil(need - 1e-12)));
}

AlignedReference align_reference(const RoughnessConfig& cfg) {
    const PartitionSequence& cand = cfg.candidate;
    const PartitionSequence& ref = cfg.reference;
    if (cand.size() == 0 || ref.size() == 0)
        throw std::invalid_argument("align_reference: empty sequence");

    AlignedReference out;
    out.aligned.grid = ref.grid;

    // Identity branch: the level-for-level dyadic reference already dominates.
    bool identity_ok = cand.size() <= ref.size();
    for (std::size_t k = 0; identity_ok && k < cand.size(); ++k) {
        const double lhs = std::pow(static_cast<double>(cand.level(k).cells()), cfg.p + cfg.epsilon);
        identity_ok = lhs <= static_cast<double>(ref.level(k).cells());
    }
    const int max_id = ref.level_ids.back();

    for (std::size_t k = 0; k < cand.size(); ++k) {
        int want;
        bool level_trunc = false;
        if (identity_ok) {
            want = ref.level_ids[k];
        } else {
            want = dyadic_alignment_level(cand.level(k).cells(), cfg.p, cfg.epsilon);
            if (want > max_id) {
                want = max_id;
                level_trunc = true;
                out.truncated = true;
            }
        }
        out.level_truncated.push_back(level_trunc);
        auto pos = std::find(ref.level_ids.begin(), ref.level_ids.end(), want);
        if (pos == ref.level_ids.end())
            throw std::invalid_argument("align_reference: reference level missing");
        const std::size_t rk = static_cast<std::size_t>(pos - ref.level_ids.begin());
        out.aligned.levels.push_back(ref.levels[rk]);
        out.aligned.level_ids.push_back(ref.level_ids[rk]);
        out.levels.push_back(ref.level_ids[rk]);
        out.cond_i_ratio.push_back(std::pow(static_cast<double>(cand.level(k).cells()), cfg.p) /
                                   static_cast<double>(ref.levels[rk].cells()));
    }
    out.identity = identity_ok;
    return out;
}

namespace {

struct Bucketer {
    // Positions of ref points inside each coarse cell (t_k, t_{k+1}], as a
    // half-open position range [first, last) per bucket.
    std::vector<std::pair<std::size_t, std::size_t>> ranges;

    Bucketer(const Partition& coarse, const Partition& ref) {
        const auto& ci = coarse.indices();
        const auto& ri = ref.indices();
        ranges.reserve(ci.size() - 1);
        std::size_t pos = 1;  // ref position 0 is the origin, in no bucket
        for (std::size_t k = 0; k + 1 < ci.size(); ++k) {
            while (pos < ri.size() && ri[pos] <= ci[k]) ++pos;
            std::size_t first = pos;
            while (pos < ri.size() && ri[pos] <= ci[k + 1]) ++pos;
            ranges.emplace_back(first, pos);
        }
    }
};

}  // namespace

Tensor quadratic_roughness_stat(const SamplePath& x, const Partition& coarse, const Partition& ref,
                                double t) {
    if (!same_grid(coarse.grid_ptr(), ref.grid_ptr()) || !same_grid(coarse.grid_ptr(), x.grid_ptr()))
        throw std::invalid_argument("quadratic_roughness_stat: grid mismatch");
    if (t < 0.0 || t > x.grid().t_max() * (1.0 + 1e-12))
        throw std::out_of_range("quadratic_roughness_stat: t outside [0,T]");
    const std::size_t t_idx = x.grid().floor_index(t);
    const int d = x.dim();
    const auto& ri = ref.indices();
    const std::size_t last_pos = ri.size() - 1;

    Tensor total(d);
    std::vector<double> sum(static_cast<std::size_t>(d));
    std::vector<double> delta(static_cast<std::size_t>(d));
    Tensor diag(d);
    Bucketer buckets(coarse, ref);
    for (const auto& [first, last] : buckets.ranges) {
        if (first >= last) continue;
        std::fill(sum.begin(), sum.end(), 0.0);
        std::fill(diag.e.begin(), diag.e.end(), 0.0);
        for (std::size_t i = first; i < last; ++i) {
            const std::size_t lo = std::min(ri[i], t_idx);
            const std::size_t hi = std::min(i + 1 <= last_pos ? ri[i + 1] : ri[last_pos], t_idx);
            auto xa = x.value(lo);
            auto xb = x.value(hi);
            for (int c = 0; c < d; ++c) delta[static_cast<std::size_t>(c)] = xb[c] - xa[c];
            for (int a = 0; a < d; ++a) {
                sum[static_cast<std::size_t>(a)] += delta[static_cast<std::size_t>(a)];
                for (int b = 0; b < d; ++b)
                    diag(a, b) += delta[static_cast<std::size_t>(a)] * delta[static_cast<std::size_t>(b)];
            }
        }
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                total(a, b) += sum[static_cast<std::size_t>(a)] * sum[static_cast<std::size_t>(b)] - diag(a, b);
    }
    return total;
}

Tensor levy_roughness_stat(const SamplePath& x, const Partition& coarse, const Partition& ref,
                           double t) {
    if (!same_grid(coarse.grid_ptr(), ref.grid_ptr()) || !same_grid(coarse.grid_ptr(), x.grid_ptr()))
        throw std::invalid_argument("levy_roughness_stat: grid mismatch");
    if (t < 0.0 || t > x.grid().t_max() * (1.0 + 1e-12))
        throw std::out_of_range("levy_roughness_stat: t outside [0,T]");
    const std::size_t t_idx = x.grid().floor_index(t);
    const int d = x.dim();
    const auto& ri = ref.indices();
    const std::size_t last_pos = ri.size() - 1;

    Tensor total(d);
    std::vector<double> alt(static_cast<std::size_t>(d));
    std::vector<double> bsum(static_cast<std::size_t>(d));
    Tensor diag(d);
    Bucketer buckets(coarse, ref);
    for (const auto& [first, last] : buckets.ranges) {
        const std::size_t count = last - first;
        if (count == 0) continue;
        const std::size_t keep = (count % 2 == 1) ? count : count - 1;  // odd number of terms
        if (keep == 0) continue;
        std::fill(alt.begin(), alt.end(), 0.0);
        std::fill(bsum.begin(), bsum.end(), 0.0);
        std::fill(diag.e.begin(), diag.e.end(), 0.0);
        for (std::size_t i = first; i < first + keep; ++i) {
            const std::size_t lo = std::min(ri[i], t_idx);
            const std::size_t hi = std::min(i + 1 <= last_pos ? ri[i + 1] : ri[last_pos], t_idx);
            auto xa = x.value(lo);
            auto xb = x.value(hi);
            const double sign = ((i - first) % 2 == 0) ? 1.0 : -1.0;
            for (int a = 0; a < d; ++a) {
                const double ai = xb[a] + xa[a];
                const double bi = xb[a] - xa[a];
                alt[static_cast<std::size_t>(a)] += sign * ai;
                bsum[static_cast<std::size_t>(a)] += bi;
            }
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    diag(a, b) += (xb[a] + xa[a]) * (xb[b] - xa[b]);
        }
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                total(a, b) += alt[static_cast<std::size_t>(a)] * bsum[static_cast<std::size_t>(b)] - diag(a, b);
    }
    return total;
}

namespace {

int deepest_dyadic_level(const TimeGrid& grid, int cap = 24) {
    int depth = 0;
    for (int n = 1; n <= cap; ++n) {
        bool ok = true;
        const std::size_t cells = std::size_t{1} << n;
        for (std::size_t k = 1; k < cells && ok; ++k) {
            const double t = grid.t_max() * static_cast<double>(k) / static_cast<double>(cells);
            ok = grid.index_at_time(t).has_value();
        }
        if (!ok) break;
        depth = n;
    }
    return depth;
}

double slope_last3(const std::vector<double>& mags) {
    const std::size_t n = mags.size();
    if (n < 2) return 0.0;
    const std::size_t use = std::min<std::size_t>(3, n);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < use; ++i) {
        const double xv = static_cast<double>(i);
        const double yv = std::log10(std::max(mags[n - use + i], 1e-300));
        sx += xv;
        sy += yv;
        sxx += xv * xv;
        sxy += xv * yv;
    }
    const double m = static_cast<double>(use);
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

RoughnessSide roughness_side(const SamplePath& x, const PartitionSequence& cand,
                             const PartitionSequence& reference, double p, double epsilon,
                             double decay_tol) {
    RoughnessConfig cfg;
    cfg.p = p;
    cfg.epsilon = epsilon;
    cfg.reference = reference;
    cfg.candidate = cand;
    cfg.control = hoelder_control(cand.grid, 1.0, 1.0);
    AlignedReference ar = align_reference(cfg);

    RoughnessSide side;
    side.identity_alignment = ar.identity;
    side.any_truncated = ar.truncated;
    side.c_balanced_ratio = c_balanced_ratio(ar.aligned, cfg.control).overall;

    const double t_end = x.grid().t_max();
    std::vector<double> quad_mags, levy_mags;
    for (std::size_t k = 0; k < cand.size(); ++k) {
        RoughnessLevelStat st;
        st.level = cand.level_ids[k];
        st.candidate_cells = cand.level(k).cells();
        st.reference_cells = ar.aligned.level(k).cells();
        st.t = t_end;
        st.quadratic = quadratic_roughness_stat(x, cand.level(k), ar.aligned.level(k), t_end);
        st.levy = levy_roughness_stat(x, cand.level(k), ar.aligned.level(k), t_end);
        st.cond_i_ratio = ar.cond_i_ratio[k];
        st.truncated = ar.level_truncated[k];
        quad_mags.push_back(st.quadratic.frobenius());
        levy_mags.push_back(st.levy.frobenius());
        side.stats.push_back(std::move(st));
    }
    side.quad_slope = slope_last3(quad_mags);
    side.levy_slope = slope_last3(levy_mags);
    side.quad_decaying = side.quad_slope < 0.0 && quad_mags.back() < decay_tol;
    side.levy_decaying = side.levy_slope < 0.0 && levy_mags.back() < decay_tol;
    return side;
}

}  // namespace

RoughnessSide roughness_analysis(const SamplePath& x, const PartitionSequence& candidate, double p,
                                 double epsilon, double decay_tol) {
    if (!same_grid(candidate.grid, x.grid_ptr()))
        throw std::invalid_argument("roughness_analysis: grid mismatch");
    const int depth = deepest_dyadic_level(x.grid());
    if (depth < 1) throw std::invalid_argument("roughness_analysis: grid embeds no dyadic reference");
    const PartitionSequence reference = dyadic_sequence(x.grid_ptr(), depth);
    return roughness_side(x, candidate, reference, p, epsilon, decay_tol);
}

InvarianceReport invariance_experiment(const SamplePath& x, const PartitionSequence& seq_a,
                                       const PartitionSequence& seq_b, double p, double epsilon,
                                       double decay_tol) {
    if (!same_grid(seq_a.grid, x.grid_ptr()) || !same_grid(seq_b.grid, x.grid_ptr()))
        throw std::invalid_argument("invariance_experiment: grid mismatch");

    InvarianceReport rep;
    rep.p = p;
    rep.epsilon = epsilon;
    rep.decay_tol = decay_tol;

    const RunningIntegral qv_a = quadratic_variation(x, seq_a.finest());
    const RunningIntegral qv_b = quadratic_variation(x, seq_b.finest());
    const RunningIntegral levy_a = levy_area_sum(x, seq_a.finest());
    const RunningIntegral levy_b = levy_area_sum(x, seq_b.finest());
    rep.qv_sup_diff = uniform_distance(qv_a, qv_b);
    rep.levy_sup_diff = uniform_distance(levy_a, levy_b);
    auto end_diff = [](const RunningIntegral& f, const RunningIntegral& g) {
        double m = 0.0;
        auto a = f.at_end();
        auto b = g.at_end();
        for (std::size_t e = 0; e < a.size(); ++e) m = std::max(m, std::abs(a[e] - b[e]));
        return m;
    };
    rep.qv_diff_at_end = end_diff(qv_a, qv_b);
    rep.levy_diff_at_end = end_diff(levy_a, levy_b);

    const int depth = deepest_dyadic_level(x.grid());
    if (depth < 1)
        throw std::invalid_argument("invariance_experiment: grid embeds no dyadic reference");
    const PartitionSequence reference = dyadic_sequence(x.grid_ptr(), depth);
    rep.side_a = roughness_side(x, seq_a, reference, p, epsilon, decay_tol);
    rep.side_b = roughness_side(x, seq_b, reference, p, epsilon, decay_tol);
    return rep;
}

}  // namespace pathint

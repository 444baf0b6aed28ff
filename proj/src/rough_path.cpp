#include "pathint/rough_path.hpp"

#include <cmath>
#include <stdexcept>

#include "pathint/pvar.hpp"

namespace pathint {

RoughPathLift::RoughPathLift(SamplePath x, RunningIntegral iterated, GammaWeight gamma, double p)
    : x_(std::move(x)), iterated_(std::move(iterated)), gamma_(gamma.value), p_(p) {
    if (!(p > 2.0 && p < 3.0)) throw std::invalid_argument("RoughPathLift: p must be in (2,3)");
    if (!same_grid(x_.grid_ptr(), iterated_.grid_ptr()))
        throw std::invalid_argument("RoughPathLift: grid mismatch");
    if (iterated_.rows() != x_.dim() || iterated_.cols() != x_.dim())
        throw std::invalid_argument("RoughPathLift: iterated integral shape mismatch");
}

Tensor RoughPathLift::xx(std::size_t s, std::size_t t) const {
    if (s > t) throw std::out_of_range("RoughPathLift::xx: s > t");
    const int d = x_.dim();
    Tensor out(d);
    auto is = iterated_.at(s);
    auto it = iterated_.at(t);
    auto xs = x_.value(s);
    auto xt = x_.value(t);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const std::size_t e = static_cast<std::size_t>(i) * d + j;
            out.e[e] = it[e] - is[e] - xs[i] * (xt[j] - xs[j]);
        }
    return out;
}

double RoughPathLift::xx_frobenius(std::size_t s, std::size_t t) const {
    const int d = x_.dim();
    auto is = iterated_.at(s);
    auto it = iterated_.at(t);
    auto xs = x_.value(s);
    auto xt = x_.value(t);
    double acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const std::size_t e = static_cast<std::size_t>(i) * d + j;
            const double v = it[e] - is[e] - xs[i] * (xt[j] - xs[j]);
            acc += v * v;
        }
    return std::sqrt(acc);
}

LiftResult lift_gamma_rie(const SamplePath& x, const PartitionSequence& seq, GammaWeight gamma,
                          double p, double tol_rel) {
    if (!(p > 2.0 && p < 3.0)) throw std::invalid_argument("lift_gamma_rie: p must be in (2,3)");
    if (seq.size() < 2) throw std::invalid_argument("lift_gamma_rie: need at least 2 levels");
    std::vector<RunningIntegral> levels;
    std::vector<std::size_t> cells;
    levels.reserve(seq.size());
    for (const Partition& part : seq.levels) {
        levels.push_back(gamma_riemann_tensor(x, part, gamma));
        cells.push_back(part.cells());
    }
    ConvergenceReport rep = cauchy_report(levels, cells, seq.level_ids, tol_rel);
    RoughPathLift lift(x, std::move(levels.back()), gamma, p);
    return LiftResult{std::move(lift), std::move(rep)};
}

Tensor chen_defect(const RoughPathLift& lift, std::size_t s, std::size_t u, std::size_t t) {
    if (!(s <= u && u <= t)) throw std::out_of_range("chen_defect: need s <= u <= t");
    Tensor out = lift.xx(s, t);
    out -= lift.xx(s, u);
    out -= lift.xx(u, t);
    const auto a = increment(lift.path(), s, u);
    const auto b = increment(lift.path(), u, t);
    out -= tensor(a, b);
    return out;
}

std::pair<double, double> rough_seminorm(const RoughPathLift& lift, std::size_t i, std::size_t j) {
    const double px = p_variation(lift.path(), lift.p(), i, j);
    const double pxx = pvar_2param(
        [&lift](std::size_t u, std::size_t v) { return lift.xx_frobenius(u, v); }, lift.p() / 2.0, i,
        j);
    return {px, pxx};
}

namespace {

double frobenius_defect(const RunningIntegral& iterated, const SamplePath& x, double gamma,
                        std::size_t s, std::size_t t) {
    // |I_t - I_s - (X_s + gamma X_{s,t}) (x) X_{s,t}|_F : the two-parameter
    // window defect of the running sums at partition points.
    const int d = x.dim();
    auto is = iterated.at(s);
    auto it = iterated.at(t);
    auto xs = x.value(s);
    auto xt = x.value(t);
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        const double wi = xs[i] + gamma * (xt[i] - xs[i]);
        for (int j = 0; j < d; ++j) {
            const std::size_t e = static_cast<std::size_t>(i) * d + j;
            const double v = it[e] - is[e] - wi * (xt[j] - xs[j]);
            acc += v * v;
        }
    }
    return std::sqrt(acc);
}

}  // namespace

RieReport rie_check(const SamplePath& x, const PartitionSequence& seq, GammaWeight gamma, double p,
                    const ControlFunction& control, double flag_threshold, double tol_rel) {
    if (!(p > 2.0 && p < 3.0)) throw std::invalid_argument("rie_check: p must be in (2,3)");
    RieReport rep;
    rep.gamma = gamma.value;
    rep.p = p;
    rep.control_kind = control.describe();
    rep.flag_threshold = flag_threshold;
    rep.ratio_x_domain = "partition pairs of every level plus consecutive grid cells";

    std::vector<RunningIntegral> levels;
    std::vector<std::size_t> cells;
    for (const Partition& part : seq.levels) {
        levels.push_back(gamma_riemann_tensor(x, part, gamma));
        cells.push_back(part.cells());
    }
    rep.condition_i = cauchy_report(levels, cells, seq.level_ids, tol_rel);
    if (gamma.value == 0.0) {
        rep.condition_i_left = rep.condition_i;
    } else {
        std::vector<RunningIntegral> left;
        for (const Partition& part : seq.levels)
            left.push_back(gamma_riemann_tensor(x, part, GammaWeight(0.0)));
        rep.condition_i_left = cauchy_report(left, cells, seq.level_ids, tol_rel);
    }

    const double half_p = 0.5 * p;
    const bool pvar_fast =
        control.kind == ControlFunction::Kind::pvar && control.source != nullptr;

    for (std::size_t lvl = 0; lvl < seq.size(); ++lvl) {
        const Partition& part = seq.levels[lvl];
        const RunningIntegral& iterated = levels[lvl];
        const auto& idx = part.indices();
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
            std::vector<double> profile;
            if (pvar_fast)
                profile = pvar_prefix_profile(*control.source, control.p, idx[k], idx.back());
            for (std::size_t l = k + 1; l < idx.size(); ++l) {
                const double c = pvar_fast ? profile[idx[l] - idx[k]] : control.eval(idx[k], idx[l]);
                if (c <= 0.0) continue;  // 0/0 convention: skip degenerate cells
                const double dx = increment_norm(x, idx[k], idx[l]);
                rep.sup_ratio_x = std::max(rep.sup_ratio_x, std::pow(dx, p) / c);
                const double defect = frobenius_defect(iterated, x, gamma.value, idx[k], idx[l]);
                rep.sup_ratio_xx = std::max(rep.sup_ratio_xx, std::pow(defect, half_p) / c);
            }
        }
    }
    // Increment ratios on the fine grid cells as well; these are the pairs a
    // vanishing-oscillation check cares about most.
    for (std::size_t i = 0; i + 1 < x.length(); ++i) {
        const double c = control.eval(i, i + 1);
        if (c <= 0.0) continue;
        rep.sup_ratio_x = std::max(rep.sup_ratio_x, std::pow(increment_norm(x, i, i + 1), p) / c);
    }
    rep.flagged = rep.sup_ratio_x > flag_threshold || rep.sup_ratio_xx > flag_threshold;
    return rep;
}

EquivalenceAudit equivalence_audit(const SamplePath& x, const PartitionSequence& seq, double p,
                                   double tol_rel) {
    if (seq.size() < 2) throw std::invalid_argument("equivalence_audit: need at least 2 levels");
    EquivalenceAudit audit;
    audit.p = p;
    std::vector<RunningIntegral> left, mid, qv, levy;
    std::vector<std::size_t> cells;
    for (const Partition& part : seq.levels) {
        left.push_back(gamma_riemann_tensor(x, part, GammaWeight(0.0)));
        mid.push_back(gamma_riemann_tensor(x, part, GammaWeight(0.5)));
        qv.push_back(quadratic_variation(x, part));
        levy.push_back(levy_area_sum(x, part));
        cells.push_back(part.cells());
    }
    audit.left_sums = cauchy_report(left, cells, seq.level_ids, tol_rel);
    audit.mid_sums = cauchy_report(mid, cells, seq.level_ids, tol_rel);
    audit.qv = cauchy_report(qv, cells, seq.level_ids, tol_rel);
    audit.levy = cauchy_report(levy, cells, seq.level_ids, tol_rel);

    for (std::size_t k = 0; k < seq.size(); ++k) {
        RunningIntegral twice = mid[k];
        for (double& v : twice.raw()) v *= 2.0;
        audit.max_mid_levy_defect = std::max(audit.max_mid_levy_defect, uniform_distance(twice, levy[k]));
        if (k > 0) {
            const double d_mid = uniform_distance(mid[k], mid[k - 1]);
            const double d_levy = uniform_distance(levy[k], levy[k - 1]);
            audit.max_cauchy_rearrangement =
                std::max(audit.max_cauchy_rearrangement, std::abs(d_levy - 2.0 * d_mid));
        }
    }
    audit.left_iff_qv_and_levy =
        audit.left_sums.converged == (audit.qv.converged && audit.levy.converged);
    audit.mid_iff_levy = audit.mid_sums.converged == audit.levy.converged;
    audit.validation = validate_sequence(seq, x);
    return audit;
}

}  // namespace pathint

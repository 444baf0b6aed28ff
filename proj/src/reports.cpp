#include "pathint/reports.hpp"

namespace pathint {

json to_json(const ConvergenceReport& rep) {
    json j;
    j["levels"] = json::array();
    for (const auto& e : rep.entries) {
        json row;
        row["level"] = e.level;
        row["N"] = e.cells;
        row["sup_diff_prev"] = e.sup_diff_prev;
        row["value_at_T"] = e.value_at_end;
        j["levels"].push_back(std::move(row));
    }
    j["tol"] = rep.tol;
    j["converged"] = rep.converged;
    return j;
}

json to_json(const RieReport& rep) {
    json j;
    j["gamma"] = rep.gamma;
    j["p"] = rep.p;
    j["control_kind"] = rep.control_kind;
    j["condition_i"] = to_json(rep.condition_i);
    j["condition_i_left"] = to_json(rep.condition_i_left);
    j["sup_ratio_x"] = rep.sup_ratio_x;
    j["sup_ratio_xx"] = rep.sup_ratio_xx;
    j["ratio_x_domain"] = rep.ratio_x_domain;
    j["flag_threshold"] = rep.flag_threshold;
    j["flagged"] = rep.flagged;
    return j;
}

json to_json(const IntegralResult& res) {
    json j;
    j["method"] = res.method;
    if (res.gamma) j["gamma"] = *res.gamma;
    auto v = res.value.at_end();
    j["value_at_T"] = std::vector<double>(v.begin(), v.end());
    j["ladder"] = json::array();
    for (const auto& e : res.ladder.entries) {
        json row;
        row["level"] = e.level;
        row["N"] = e.cells;
        row["sup_diff_prev"] = e.sup_diff_prev;
        j["ladder"].push_back(std::move(row));
    }
    j["converged"] = res.ladder.converged;
    if (res.sewing_constant) j["sewing_constant"] = *res.sewing_constant;
    if (res.cross_check) {
        json cc;
        cc["diff_at_T"] = res.cross_check->diff_at_end;
        cc["allowed"] = res.cross_check->allowed;
        cc["pass"] = res.cross_check->pass;
        j["cross_check"] = std::move(cc);
    }
    return j;
}

json to_json(const EquivalenceAudit& audit) {
    json j;
    j["p"] = audit.p;
    j["left_sums"] = to_json(audit.left_sums);
    j["mid_sums"] = to_json(audit.mid_sums);
    j["quadratic_variation"] = to_json(audit.qv);
    j["levy_area"] = to_json(audit.levy);
    j["max_mid_levy_defect"] = audit.max_mid_levy_defect;
    j["max_cauchy_rearrangement"] = audit.max_cauchy_rearrangement;
    j["left_iff_qv_and_levy"] = audit.left_iff_qv_and_levy;
    j["mid_iff_levy"] = audit.mid_iff_levy;
    j["oscillation"] = audit.validation.oscillation;
    j["mesh"] = audit.validation.mesh;
    j["oscillation_vanishing"] = audit.validation.oscillation_vanishing;
    j["mesh_vanishing"] = audit.validation.mesh_vanishing;
    return j;
}

json to_json(const RoughnessSide& side) {
    json j;
    j["identity_alignment"] = side.identity_alignment;
    j["any_truncated"] = side.any_truncated;
    j["c_balanced_ratio"] = side.c_balanced_ratio;
    j["cond_i_ratios"] = json::array();
    j["stats"] = json::array();
    for (const auto& st : side.stats) {
        j["cond_i_ratios"].push_back(st.cond_i_ratio);
        json row;
        row["level"] = st.level;
        row["candidate_cells"] = st.candidate_cells;
        row["reference_cells"] = st.reference_cells;
        row["t"] = st.t;
        row["quadratic"] = st.quadratic.e;
        row["levy"] = st.levy.e;
        row["truncated"] = st.truncated;
        j["stats"].push_back(std::move(row));
    }
    j["slopes"] = {side.quad_slope, side.levy_slope};
    j["verdicts"] = {{"quadratic_decaying", side.quad_decaying}, {"levy_decaying", side.levy_decaying}};
    return j;
}

json to_json(const InvarianceReport& rep) {
    json j;
    j["p"] = rep.p;
    j["epsilon"] = rep.epsilon;
    j["decay_tol"] = rep.decay_tol;
    j["qv_sup_diff"] = rep.qv_sup_diff;
    j["levy_sup_diff"] = rep.levy_sup_diff;
    j["qv_diff_at_T"] = rep.qv_diff_at_end;
    j["levy_diff_at_T"] = rep.levy_diff_at_end;
    j["side_a"] = to_json(rep.side_a);
    j["side_b"] = to_json(rep.side_b);
    return j;
}

}  // namespace pathint

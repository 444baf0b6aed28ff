#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "pathint/partition.hpp"
#include "pathint/path.hpp"
#include "pathint/riemann.hpp"
#include "pathint/rough_path.hpp"
#include "pathint/running_integral.hpp"

namespace pathint {

/// Pointwise map of a state vector: x (d entries) -> flattened output.
using VectorFn = std::function<std::vector<double>(std::span<const double>)>;

/// Integrand Y (m x d per time) with derivative structure Y' ((m x d) x d per
/// time, Y'[a,i,j] = sensitivity of Y[a,i] to the j-th base coordinate) and
/// remainder R_{s,t} = Y_{s,t} - Y'_s X_{s,t}.
struct ControlledPath {
    std::shared_ptr<const SamplePath> base;
    SamplePath y;   // dim = m * d
    SamplePath yp;  // dim = m * d * d
    int m = 1;

    ControlledPath(std::shared_ptr<const SamplePath> base_path, SamplePath y_path, SamplePath yp_path,
                   int m_rows);

    int d() const { return base->dim(); }
    std::vector<double> remainder(std::size_t s, std::size_t t) const;
    double remainder_norm(std::size_t s, std::size_t t) const;
};

/// Lift Y = f(X) with Y' = df(X). When df is empty, the derivative tensor is
/// taken by central differences with step 1e-5 * max(1, |x_j|); documented
/// precision loss of roughly sqrt(eps) applies to the remainder structure.
ControlledPath controlled_from_c2(const VectorFn& f, const VectorFn& df, const SamplePath& x, int m);

/// Young-type integrand: Y' = 0, so the whole increment is remainder.
ControlledPath controlled_young(const SamplePath& y, int m, const SamplePath& x);

struct IntegralResult {
    RunningIntegral value;  // finest-level running value, m x 1
    std::string method;     // rough_compensated | gamma_riemann | stieltjes
    std::optional<double> gamma;
    ConvergenceReport ladder;
    // Largest implied constant of the local sewing estimate on the coarsest
    // ladder cells (rough_compensated only).
    std::optional<double> sewing_constant;
    struct CrossCheck {
        double diff_at_end = 0.0;
        double allowed = 0.0;
        bool pass = false;
    };
    std::optional<CrossCheck> cross_check;
};

/// Compensated sums sum Y_u X_{u,v} + Y'_u XX_{u,v} along the ladder, with
/// the same cell clamping as the plain Riemann sums. cp.base must be the
/// lifted path.
IntegralResult rough_integral(const ControlledPath& cp, const RoughPathLift& lift,
                              const PartitionSequence& ladder, double tol_rel = 1e-3);

/// Per-level gamma-weighted Riemann sums of Y against X. With cross-checking
/// enabled the same ladder also drives a compensated-sum evaluation against
/// the canonical lift; the two agree within 3x the larger final Cauchy gap
/// when both ladders have settled.
IntegralResult pathwise_integral(const ControlledPath& cp, const SamplePath& x,
                                 const PartitionSequence& seq, GammaWeight gamma,
                                 double tol_rel = 1e-3, bool with_cross_check = true,
                                 double cross_check_p = 2.5);

/// Left-point Riemann-Stieltjes sum against a finite-variation bracket on the
/// fine grid. A scalar integrand scales the bracket increments entrywise
/// (result has the bracket's shape); an integrand matching the bracket's
/// entry count contracts against the increments (result is 1 x 1).
RunningIntegral stieltjes_qv(const SamplePath& integrand, const RunningIntegral& bracket);

/// Per-level defect of the second-order change-of-variable identity:
///   F(X_t) - F(X_0) - [gamma-sum of DF(X)]_t - (1/2 - gamma) [DF2 against the
///   level bracket]_t.
/// DF (m x d) and D2F (m x d x d) fall back to finite differences when empty.
/// For quadratic F the defect vanishes identically at every level and time.
std::vector<RunningIntegral> follmer_ito_defect(const VectorFn& f, const VectorFn& df,
                                                const VectorFn& d2f, const SamplePath& x,
                                                const PartitionSequence& seq, GammaWeight gamma,
                                                int m = 1);

/// Central-difference helpers used by the fallbacks above.
VectorFn fd_jacobian(const VectorFn& f, int out_len, int d);

}  // namespace pathint

#pragma once

#include "pathint/partition.hpp"
#include "pathint/path.hpp"
#include "pathint/running_integral.hpp"

namespace pathint {

/// Riemann-point weight: 0 evaluates at the left endpoint (forward/Ito-type),
/// 1/2 at the midpoint combination (Stratonovich-type), 1 at the right
/// endpoint (backward Ito-type).
struct GammaWeight {
    double value;
    explicit GammaWeight(double g);
};

/// Running gamma-weighted Riemann sum of a matrix integrand against X:
///   t -> sum over cells [u,v] of (Y_u' + gamma (Y_v' - Y_u')) (X_v' - X_u'),
/// where u' = u ∧ t, v' = v ∧ t. Clamping the whole cell at t makes the
/// algebraic identities between these sums exact at every grid time, not just
/// at partition points, and agrees with the usual definition wherever t is a
/// partition point. Y rows x X.dim per time (Y.dim == rows * X.dim); result
/// is rows x 1.
RunningIntegral gamma_riemann(const SamplePath& integrand, int rows, const SamplePath& x,
                              const Partition& part, GammaWeight gamma);

/// Tensor variant: t -> sum of (X_u' + gamma X_{u',v'}) (x) X_{u',v'}.
/// Kept as a separate entry point so vector-against-vector integrands are
/// never shape-ambiguous.
RunningIntegral gamma_riemann_tensor(const SamplePath& x, const Partition& part, GammaWeight gamma);

/// Running quadratic variation along the partition:
///   t -> sum of X_{u',v'} (x) X_{u',v'}.
/// Symmetric PSD at every t; diagonal entries non-decreasing.
RunningIntegral quadratic_variation(const SamplePath& x, const Partition& part);

/// Gamma-weighted bracket (1 - 2 gamma) [X]; identically zero at gamma = 1/2.
RunningIntegral gamma_quadratic_variation(const SamplePath& x, const Partition& part, GammaWeight gamma);

/// Running Levy-area sum: t -> sum of (X_u' + X_v') (x) X_{u',v'}.
/// At every t this equals 2 I^0_t + [X]_t exactly, and for d = 1 it telescopes
/// to X_t^2 - X_0^2.
RunningIntegral levy_area_sum(const SamplePath& x, const Partition& part);

/// Symmetric / antisymmetric decomposition of the two-parameter increment
/// data of a level: S_{s,t} = X_{s,t} (x) X_{s,t} - (1-2g)([X]_t - [X]_s) and
/// A_{s,t} = L_t - L_s - (X_s + X_t) (x) X_{s,t}. Exactly symmetric resp.
/// antisymmetric when s, t are partition points; A does not depend on gamma.
class SymAntisymFields {
public:
    SymAntisymFields(const SamplePath& x, const Partition& part, GammaWeight gamma);

    Tensor sym(std::size_t s, std::size_t t) const;
    Tensor antisym(std::size_t s, std::size_t t) const;

private:
    SamplePath x_;
    RunningIntegral qv_;
    RunningIntegral levy_;
    double gamma_;
};

}  // namespace pathint

#pragma once

#include <functional>
#include <vector>

#include "pathint/path.hpp"

namespace pathint {

/// p-variation of the path over the grid window [i, j], exact over all
/// partitions with grid points: DP V[k] = max_{m<k} (V[m] + |X_k - X_m|^p),
/// O(W^2). Requires p >= 1 and i <= j.
double p_variation(const SamplePath& path, double p, std::size_t i, std::size_t j);

/// The DP by-product: profile[k] = (p-variation of [t_i, t_{i+k}])^p for
/// k = 0..j-i. One O(W^2) sweep yields every prefix, which is what makes
/// per-anchor ratio scans affordable.
std::vector<double> pvar_prefix_profile(const SamplePath& path, double p, std::size_t i, std::size_t j);

/// Magnitude of a two-parameter field at a grid index pair (u <= v).
using FieldNorm = std::function<double(std::size_t, std::size_t)>;

/// r-variation of a two-parameter field over [i, j]: the same DP applied to
/// |field(u, v)|^r. The field need not be additive (Chen defect), so this
/// cannot be reduced to a one-parameter quantity. Requires r >= 1.
double pvar_2param(const FieldNorm& field, double r, std::size_t i, std::size_t j);

}  // namespace pathint

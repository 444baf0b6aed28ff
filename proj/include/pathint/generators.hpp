#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pathint/path.hpp"

namespace pathint {

/// Brownian path started at 0: independent N(0, dt) increments per coordinate.
/// Pure function of (grid, dim, seed); the draw order is one normal per
/// coordinate per step, shared with gen_ito_euler.
SamplePath gen_brownian(GridPtr grid, int dim, std::uint64_t seed);

/// Fractional Brownian motion with Hurst parameter H in (0,1), started at 0,
/// covariance 0.5 (s^{2H} + t^{2H} - |t-s|^{2H}). Exact Gaussian marginals via
/// dense Cholesky factorization of the covariance; multi-d paths use
/// independent coordinate streams (seed, coordinate).
///
/// Dense factorization is limited to grids of at most 2^12 + 1 points.
SamplePath gen_fbm(GridPtr grid, double hurst, std::uint64_t seed, int dim = 1);

using DriftFn = std::function<std::vector<double>(double t, const std::vector<double>& x)>;
/// vol returns a d x m matrix, row-major (d = state dim, m = noise dim).
using VolFn = std::function<std::vector<double>(double t, const std::vector<double>& x)>;

/// Euler-Maruyama path X_{k+1} = X_k + drift dt + vol dW for the state started
/// at x0; dW draws one normal per noise coordinate per step, so drift = 0,
/// vol = identity, x0 = 0 reproduces gen_brownian bit for bit under the same
/// seed. Throws std::runtime_error naming the step index if a non-finite
/// value appears (scheme explosion).
SamplePath gen_ito_euler(GridPtr grid, const DriftFn& drift, const VolFn& vol, int noise_dim,
                         std::uint64_t seed, std::vector<double> x0);

// Deterministic fixtures.
SamplePath linear_path(GridPtr grid, int dim = 1);       // X_t = (t, ..., t)
SamplePath circle_path(GridPtr grid);                    // X_t = (cos t, sin t)
SamplePath monomial_path(GridPtr grid, int q);           // X_t = t^q, q >= 1
SamplePath zigzag_path(GridPtr grid, int teeth);         // unit-slope triangle wave, peak T/(2m)

}  // namespace pathint

#include "pathint/generators.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pathint/errors.hpp"

#include "pathint/random.hpp"

namespace pathint {

SamplePath gen_brownian(GridPtr grid, int dim, std::uint64_t seed) {
    if (!grid) throw std::invalid_argument("gen_brownian: null grid");
    if (dim <= 0) throw std::invalid_argument("gen_brownian: dim must be positive");
    GaussianStream g(seed);
    const std::size_t n = grid->size();
    std::vector<double> values(n * static_cast<std::size_t>(dim), 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double sdt = std::sqrt(grid->dt(k));
        for (int c = 0; c < dim; ++c) {
            const std::size_t at = (k + 1) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c);
            values[at] = values[at - static_cast<std::size_t>(dim)] + sdt * g.next();
        }
    }
    return SamplePath(std::move(grid), dim, std::move(values));
}

SamplePath gen_fbm(GridPtr grid, double hurst, std::uint64_t seed, int dim) {
    if (!grid) throw std::invalid_argument("gen_fbm: null grid");
    if (!(hurst > 0.0 && hurst < 1.0)) throw std::invalid_argument("gen_fbm: hurst must be in (0,1)");
    if (dim <= 0) throw std::invalid_argument("gen_fbm: dim must be positive");
    const std::size_t max_points = (1u << 12) + 1;
    if (grid->size() > max_points)
        throw std::invalid_argument("gen_fbm: grid too fine for dense factorization (max 2^12+1 points)");

    const std::size_t n = grid->size() - 1;  // values at t_1..t_n; X_0 = 0
    Eigen::MatrixXd cov(n, n);
    const double h2 = 2.0 * hurst;
    for (std::size_t i = 0; i < n; ++i) {
        const double ti = grid->time(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            const double tj = grid->time(j + 1);
            const double v = 0.5 * (std::pow(ti, h2) + std::pow(tj, h2) - std::pow(ti - tj, h2));
            cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
            cov(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("gen_fbm: covariance factorization failed (grid too coarse or ill-conditioned)");
    const Eigen::MatrixXd L = llt.matrixL();

    std::vector<double> values(grid->size() * static_cast<std::size_t>(dim), 0.0);
    Eigen::VectorXd z(n);
    for (int c = 0; c < dim; ++c) {
        GaussianStream g(seed, static_cast<std::uint64_t>(c));
        for (std::size_t i = 0; i < n; ++i) z(static_cast<Eigen::Index>(i)) = g.next();
        const Eigen::VectorXd x = L * z;
        for (std::size_t i = 0; i < n; ++i)
            values[(i + 1) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)] =
                x(static_cast<Eigen::Index>(i));
    }
    return SamplePath(std::move(grid), dim, std::move(values));
}

SamplePath gen_ito_euler(GridPtr grid, const DriftFn& drift, const VolFn& vol, int noise_dim,
                         std::uint64_t seed, std::vector<double> x0) {
    if (!grid) throw std::invalid_argument("gen_ito_euler: null grid");
    if (noise_dim <= 0) throw std::invalid_argument("gen_ito_euler: noise_dim must be positive");
    const int d = static_cast<int>(x0.size());
    if (d <= 0) throw std::invalid_argument("gen_ito_euler: empty initial state");

    GaussianStream g(seed);
    const std::size_t n = grid->size();
    std::vector<double> values(n * static_cast<std::size_t>(d));
    std::vector<double> x = std::move(x0);
    std::vector<double> dw(static_cast<std::size_t>(noise_dim));
    for (int c = 0; c < d; ++c) values[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(c)];

    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double t = grid->time(k);
        const double dt = grid->dt(k);
        const double sdt = std::sqrt(dt);
        for (int c = 0; c < noise_dim; ++c) dw[static_cast<std::size_t>(c)] = sdt * g.next();

        const std::vector<double> mu = drift(t, x);
        const std::vector<double> sig = vol(t, x);
        if (mu.size() != static_cast<std::size_t>(d) ||
            sig.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(noise_dim))
            throw std::invalid_argument("gen_ito_euler: drift/vol output shape mismatch");

        for (int c = 0; c < d; ++c) {
            double dx = mu[static_cast<std::size_t>(c)] * dt;
            for (int m = 0; m < noise_dim; ++m)
                dx += sig[static_cast<std::size_t>(c) * static_cast<std::size_t>(noise_dim) +
                          static_cast<std::size_t>(m)] *
                      dw[static_cast<std::size_t>(m)];
            x[static_cast<std::size_t>(c)] += dx;
            if (!std::isfinite(x[static_cast<std::size_t>(c)]))
                throw NumericError("gen_ito_euler: non-finite state at step " + std::to_string(k + 1));
            values[(k + 1) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)] =
                x[static_cast<std::size_t>(c)];
        }
    }
    return SamplePath(std::move(grid), d, std::move(values));
}

SamplePath linear_path(GridPtr grid, int dim) {
    if (dim <= 0) throw std::invalid_argument("linear_path: dim must be positive");
    std::vector<double> values(grid->size() * static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < grid->size(); ++i)
        for (int c = 0; c < dim; ++c)
            values[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)] = grid->time(i);
    return SamplePath(std::move(grid), dim, std::move(values));
}

SamplePath circle_path(GridPtr grid) {
    std::vector<double> values(grid->size() * 2);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        values[i * 2] = std::cos(grid->time(i));
        values[i * 2 + 1] = std::sin(grid->time(i));
    }
    return SamplePath(std::move(grid), 2, std::move(values));
}

SamplePath monomial_path(GridPtr grid, int q) {
    if (q < 1) throw std::invalid_argument("monomial_path: q must be >= 1");
    std::vector<double> values(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) values[i] = std::pow(grid->time(i), q);
    return SamplePath(std::move(grid), 1, std::move(values));
}

SamplePath zigzag_path(GridPtr grid, int teeth) {
    if (teeth < 1) throw std::invalid_argument("zigzag_path: teeth must be >= 1");
    const double period = grid->t_max() / static_cast<double>(teeth);
    const double half = 0.5 * period;
    std::vector<double> values(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        double u = std::fmod(grid->time(i), period);
        values[i] = u <= half ? u : period - u;
    }
    return SamplePath(std::move(grid), 1, std::move(values));
}

}  // namespace pathint

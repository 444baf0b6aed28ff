#include "pathint/riemann.hpp"

#include <stdexcept>

namespace pathint {

GammaWeight::GammaWeight(double g) : value(g) {
    if (!(g >= 0.0 && g <= 1.0)) throw std::invalid_argument("GammaWeight: gamma must be in [0,1]");
}

namespace {

/// Shared accumulation scheme for running sums along a partition: for every
/// grid time t in cell (u, v], value(t) = sum of earlier full cells plus the
/// clamped contribution of the current cell evaluated on [u, t].
template <typename CellEval>
RunningIntegral accumulate_running(const GridPtr& grid, int rows, int cols, const Partition& part,
                                   CellEval&& cell) {
    RunningIntegral out(grid, rows, cols);
    const std::size_t width = out.entry_count();
    std::vector<double> acc(width, 0.0);
    std::vector<double> tmp(width, 0.0);
    const auto& idx = part.indices();
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
        const std::size_t u = idx[k];
        const std::size_t v = idx[k + 1];
        for (std::size_t t = u + 1; t <= v; ++t) {
            cell(u, t, tmp);
            auto row = out.at(t);
            for (std::size_t e = 0; e < width; ++e) row[e] = acc[e] + tmp[e];
        }
        auto done = out.at(v);
        for (std::size_t e = 0; e < width; ++e) acc[e] = done[e];
    }
    return out;
}

}  // namespace

RunningIntegral gamma_riemann(const SamplePath& integrand, int rows, const SamplePath& x,
                              const Partition& part, GammaWeight gamma) {
    if (!same_grid(integrand.grid_ptr(), x.grid_ptr()) || !same_grid(x.grid_ptr(), part.grid_ptr()))
        throw std::invalid_argument("gamma_riemann: grid mismatch");
    const int d = x.dim();
    if (rows <= 0 || integrand.dim() != rows * d)
        throw std::invalid_argument("gamma_riemann: integrand shape mismatch");
    const double g = gamma.value;
    return accumulate_running(x.grid_ptr(), rows, 1, part,
                              [&](std::size_t u, std::size_t t, std::vector<double>& out) {
                                  auto yu = integrand.value(u);
                                  auto yt = integrand.value(t);
                                  auto xu = x.value(u);
                                  auto xt = x.value(t);
                                  for (int r = 0; r < rows; ++r) {
                                      double s = 0.0;
                                      for (int c = 0; c < d; ++c) {
                                          const std::size_t w = static_cast<std::size_t>(r) * d + c;
                                          const double weight = yu[w] + g * (yt[w] - yu[w]);
                                          s += weight * (xt[c] - xu[c]);
                                      }
                                      out[static_cast<std::size_t>(r)] = s;
                                  }
                              });
}

RunningIntegral gamma_riemann_tensor(const SamplePath& x, const Partition& part, GammaWeight gamma) {
    if (!same_grid(x.grid_ptr(), part.grid_ptr()))
        throw std::invalid_argument("gamma_riemann_tensor: grid mismatch");
    const int d = x.dim();
    const double g = gamma.value;
    return accumulate_running(x.grid_ptr(), d, d, part,
                              [&](std::size_t u, std::size_t t, std::vector<double>& out) {
                                  auto xu = x.value(u);
                                  auto xt = x.value(t);
                                  for (int i = 0; i < d; ++i) {
                                      const double wi = xu[i] + g * (xt[i] - xu[i]);
                                      for (int j = 0; j < d; ++j)
                                          out[static_cast<std::size_t>(i) * d + j] = wi * (xt[j] - xu[j]);
                                  }
                              });
}

RunningIntegral quadratic_variation(const SamplePath& x, const Partition& part) {
    if (!same_grid(x.grid_ptr(), part.grid_ptr()))
        throw std::invalid_argument("quadratic_variation: grid mismatch");
    const int d = x.dim();
    return accumulate_running(x.grid_ptr(), d, d, part,
                              [&](std::size_t u, std::size_t t, std::vector<double>& out) {
                                  auto xu = x.value(u);
                                  auto xt = x.value(t);
                                  for (int i = 0; i < d; ++i) {
                                      const double di = xt[i] - xu[i];
                                      for (int j = 0; j < d; ++j)
                                          out[static_cast<std::size_t>(i) * d + j] = di * (xt[j] - xu[j]);
                                  }
                              });
}

RunningIntegral gamma_quadratic_variation(const SamplePath& x, const Partition& part, GammaWeight gamma) {
    RunningIntegral qv = quadratic_variation(x, part);
    const double scale = 1.0 - 2.0 * gamma.value;
    for (double& v : qv.raw()) v *= scale;
    return qv;
}

RunningIntegral levy_area_sum(const SamplePath& x, const Partition& part) {
    if (!same_grid(x.grid_ptr(), part.grid_ptr()))
        throw std::invalid_argument("levy_area_sum: grid mismatch");
    const int d = x.dim();
    return accumulate_running(x.grid_ptr(), d, d, part,
                              [&](std::size_t u, std::size_t t, std::vector<double>& out) {
                                  auto xu = x.value(u);
                                  auto xt = x.value(t);
                                  for (int i = 0; i < d; ++i) {
                                      const double si = xu[i] + xt[i];
                                      for (int j = 0; j < d; ++j)
                                          out[static_cast<std::size_t>(i) * d + j] = si * (xt[j] - xu[j]);
                                  }
                              });
}

SymAntisymFields::SymAntisymFields(const SamplePath& x, const Partition& part, GammaWeight gamma)
    : x_(x), qv_(quadratic_variation(x, part)), levy_(levy_area_sum(x, part)), gamma_(gamma.value) {}

Tensor SymAntisymFields::sym(std::size_t s, std::size_t t) const {
    auto inc = increment(x_, s, t);
    Tensor out = tensor(inc, inc);
    const double scale = 1.0 - 2.0 * gamma_;
    auto qs = qv_.at(s);
    auto qt = qv_.at(t);
    for (std::size_t e = 0; e < out.e.size(); ++e) out.e[e] -= scale * (qt[e] - qs[e]);
    return out;
}

Tensor SymAntisymFields::antisym(std::size_t s, std::size_t t) const {
    const int d = x_.dim();
    auto xs = x_.value(s);
    auto xt = x_.value(t);
    Tensor out(d);
    auto ls = levy_.at(s);
    auto lt = levy_.at(t);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const std::size_t e = static_cast<std::size_t>(i) * d + j;
            out.e[e] = lt[e] - ls[e] - (xs[i] + xt[i]) * (xt[j] - xs[j]);
        }
    return out;
}

}  // namespace pathint

#include "pathint/controlled.hpp"

#include <cmath>
#include <stdexcept>

#include "pathint/pvar.hpp"

namespace pathint {

ControlledPath::ControlledPath(std::shared_ptr<const SamplePath> base_path, SamplePath y_path,
                               SamplePath yp_path, int m_rows)
    : base(std::move(base_path)), y(std::move(y_path)), yp(std::move(yp_path)), m(m_rows) {
    if (!base) throw std::invalid_argument("ControlledPath: null base");
    if (m <= 0) throw std::invalid_argument("ControlledPath: m must be positive");
    const int dd = base->dim();
    if (!same_grid(base->grid_ptr(), y.grid_ptr()) || !same_grid(base->grid_ptr(), yp.grid_ptr()))
        throw std::invalid_argument("ControlledPath: grid mismatch");
    if (y.dim() != m * dd || yp.dim() != m * dd * dd)
        throw std::invalid_argument("ControlledPath: component shape mismatch");
}

std::vector<double> ControlledPath::remainder(std::size_t s, std::size_t t) const {
    const int dd = d();
    std::vector<double> r(static_cast<std::size_t>(m) * dd);
    auto ys = y.value(s);
    auto yt = y.value(t);
    auto yps = yp.value(s);
    auto xs = base->value(s);
    auto xt = base->value(t);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < dd; ++i) {
            const std::size_t w = static_cast<std::size_t>(a) * dd + i;
            double v = yt[w] - ys[w];
            for (int j = 0; j < dd; ++j)
                v -= yps[w * static_cast<std::size_t>(dd) + j] * (xt[j] - xs[j]);
            r[w] = v;
        }
    return r;
}

double ControlledPath::remainder_norm(std::size_t s, std::size_t t) const {
    const auto r = remainder(s, t);
    double acc = 0.0;
    for (double v : r) acc += v * v;
    return std::sqrt(acc);
}

VectorFn fd_jacobian(const VectorFn& f, int out_len, int d) {
    return [f, out_len, d](std::span<const double> x) {
        std::vector<double> jac(static_cast<std::size_t>(out_len) * d);
        std::vector<double> xp(x.begin(), x.end());
        for (int j = 0; j < d; ++j) {
            const double h = 1e-5 * std::max(1.0, std::abs(x[static_cast<std::size_t>(j)]));
            xp[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] + h;
            const std::vector<double> up = f(xp);
            xp[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] - h;
            const std::vector<double> dn = f(xp);
            xp[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
            for (int a = 0; a < out_len; ++a)
                jac[static_cast<std::size_t>(a) * d + j] =
                    (up[static_cast<std::size_t>(a)] - dn[static_cast<std::size_t>(a)]) / (2.0 * h);
        }
        return jac;
    };
}

ControlledPath controlled_from_c2(const VectorFn& f, const VectorFn& df, const SamplePath& x, int m) {
    if (m <= 0) throw std::invalid_argument("controlled_from_c2: m must be positive");
    const int d = x.dim();
    const VectorFn deriv = df ? df : fd_jacobian(f, m * d, d);

    std::vector<double> yv(x.length() * static_cast<std::size_t>(m) * d);
    std::vector<double> ypv(x.length() * static_cast<std::size_t>(m) * d * d);
    for (std::size_t i = 0; i < x.length(); ++i) {
        const std::vector<double> fy = f(x.value(i));
        if (fy.size() != static_cast<std::size_t>(m) * d)
            throw std::invalid_argument("controlled_from_c2: f output size mismatch");
        const std::vector<double> fyp = deriv(x.value(i));
        if (fyp.size() != static_cast<std::size_t>(m) * d * d)
            throw std::invalid_argument("controlled_from_c2: df output size mismatch");
        std::copy(fy.begin(), fy.end(), yv.begin() + static_cast<std::ptrdiff_t>(i * fy.size()));
        std::copy(fyp.begin(), fyp.end(), ypv.begin() + static_cast<std::ptrdiff_t>(i * fyp.size()));
    }
    return ControlledPath(std::make_shared<const SamplePath>(x),
                          SamplePath(x.grid_ptr(), m * d, std::move(yv)),
                          SamplePath(x.grid_ptr(), m * d * d, std::move(ypv)), m);
}

ControlledPath controlled_young(const SamplePath& y, int m, const SamplePath& x) {
    if (m <= 0) throw std::invalid_argument("controlled_young: m must be positive");
    if (!same_grid(y.grid_ptr(), x.grid_ptr()))
        throw std::invalid_argument("controlled_young: grid mismatch");
    if (y.dim() != m * x.dim()) throw std::invalid_argument("controlled_young: integrand shape mismatch");
    SamplePath yp(x.grid_ptr(), m * x.dim() * x.dim(),
                  std::vector<double>(x.length() * static_cast<std::size_t>(m) * x.dim() * x.dim(), 0.0));
    return ControlledPath(std::make_shared<const SamplePath>(x), y, std::move(yp), m);
}

namespace {

RunningIntegral compensated_running(const ControlledPath& cp, const RoughPathLift& lift,
                                    const Partition& part) {
    const SamplePath& x = *cp.base;
    const int d = x.dim();
    const int m = cp.m;
    const RunningIntegral& iter = lift.iterated();
    RunningIntegral out(x.grid_ptr(), m, 1);
    std::vector<double> acc(static_cast<std::size_t>(m), 0.0);
    const auto& idx = part.indices();
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
        const std::size_t u = idx[k];
        const std::size_t v = idx[k + 1];
        auto yu = cp.y.value(u);
        auto ypu = cp.yp.value(u);
        auto xu = x.value(u);
        auto iu = iter.at(u);
        for (std::size_t t = u + 1; t <= v; ++t) {
            auto xt = x.value(t);
            auto it = iter.at(t);
            auto row = out.at(t);
            for (int a = 0; a < m; ++a) {
                double s = 0.0;
                for (int i = 0; i < d; ++i) {
                    s += yu[static_cast<std::size_t>(a) * d + i] * (xt[i] - xu[i]);
                    for (int j = 0; j < d; ++j) {
                        const std::size_t e = static_cast<std::size_t>(i) * d + j;
                        const double xx = it[e] - iu[e] - xu[i] * (xt[j] - xu[j]);
                        s += ypu[(static_cast<std::size_t>(a) * d + i) * static_cast<std::size_t>(d) + j] * xx;
                    }
                }
                row[static_cast<std::size_t>(a)] = acc[static_cast<std::size_t>(a)] + s;
            }
        }
        auto done = out.at(v);
        for (int a = 0; a < m; ++a) acc[static_cast<std::size_t>(a)] = done[static_cast<std::size_t>(a)];
    }
    return out;
}

double sewing_constant(const ControlledPath& cp, const RoughPathLift& lift,
                       const RunningIntegral& finest, const Partition& coarse) {
    // Local estimate on each coarse cell: |I_{u,v} - Y_u X_{u,v} - Y'_u XX_{u,v}|
    // against ||R||_{p/2} ||X||_p + ||Y'||_p ||XX||_{p/2} on the cell window.
    const double p = lift.p();
    const SamplePath& x = *cp.base;
    const int d = x.dim();
    const int m = cp.m;
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < coarse.points(); ++k) {
        const std::size_t u = coarse.grid_index(k);
        const std::size_t v = coarse.grid_index(k + 1);
        auto iu = finest.at(u);
        auto iv = finest.at(v);
        auto yu = cp.y.value(u);
        auto ypu = cp.yp.value(u);
        auto xu = x.value(u);
        auto xv = x.value(v);
        const Tensor xx = lift.xx(u, v);
        double lhs = 0.0;
        for (int a = 0; a < m; ++a) {
            double s = iv[static_cast<std::size_t>(a)] - iu[static_cast<std::size_t>(a)];
            for (int i = 0; i < d; ++i) {
                s -= yu[static_cast<std::size_t>(a) * d + i] * (xv[i] - xu[i]);
                for (int j = 0; j < d; ++j)
                    s -= ypu[(static_cast<std::size_t>(a) * d + i) * static_cast<std::size_t>(d) + j] *
                         xx(i, j);
            }
            lhs = std::max(lhs, std::abs(s));
        }
        const double norm_x = p_variation(x, p, u, v);
        const double norm_xx = pvar_2param(
            [&lift](std::size_t s0, std::size_t t0) { return lift.xx_frobenius(s0, t0); }, p / 2.0, u, v);
        const double norm_r = pvar_2param(
            [&cp](std::size_t s0, std::size_t t0) { return cp.remainder_norm(s0, t0); }, p / 2.0, u, v);
        const double norm_yp = p_variation(cp.yp, p, u, v);
        const double rhs = norm_r * norm_x + norm_yp * norm_xx;
        if (rhs > 0.0) worst = std::max(worst, lhs / rhs);
    }
    return worst;
}

}  // namespace

IntegralResult rough_integral(const ControlledPath& cp, const RoughPathLift& lift,
                              const PartitionSequence& ladder, double tol_rel) {
    if (!cp.base) throw std::invalid_argument("rough_integral: controlled path has no base");
    if (!(*cp.base == lift.path())) throw std::invalid_argument("rough_integral: base path mismatch");
    if (ladder.size() < 2) throw std::invalid_argument("rough_integral: need at least 2 ladder levels");

    std::vector<RunningIntegral> levels;
    std::vector<std::size_t> cells;
    for (const Partition& part : ladder.levels) {
        levels.push_back(compensated_running(cp, lift, part));
        cells.push_back(part.cells());
    }
    IntegralResult res{levels.back(), "rough_compensated", std::nullopt,
                       cauchy_report(levels, cells, ladder.level_ids, tol_rel), std::nullopt,
                       std::nullopt};
    res.sewing_constant = sewing_constant(cp, lift, levels.back(), ladder.levels.front());
    return res;
}

IntegralResult pathwise_integral(const ControlledPath& cp, const SamplePath& x,
                                 const PartitionSequence& seq, GammaWeight gamma, double tol_rel,
                                 bool with_cross_check, double cross_check_p) {
    if (!cp.base) throw std::invalid_argument("pathwise_integral: controlled path has no base");
    if (!(*cp.base == x)) throw std::invalid_argument("pathwise_integral: base path mismatch");
    if (seq.size() < 2) throw std::invalid_argument("pathwise_integral: need at least 2 levels");

    std::vector<RunningIntegral> levels;
    std::vector<std::size_t> cells;
    for (const Partition& part : seq.levels) {
        levels.push_back(gamma_riemann(cp.y, cp.m, x, part, gamma));
        cells.push_back(part.cells());
    }
    IntegralResult res{levels.back(), "gamma_riemann", gamma.value,
                       cauchy_report(levels, cells, seq.level_ids, tol_rel), std::nullopt,
                       std::nullopt};

    if (with_cross_check) {
        LiftResult lifted = lift_gamma_rie(x, seq, gamma, cross_check_p, tol_rel);
        IntegralResult rough = rough_integral(cp, lifted.lift, seq, tol_rel);
        IntegralResult::CrossCheck cc;
        auto a = res.value.at_end();
        auto b = rough.value.at_end();
        for (std::size_t e = 0; e < a.size(); ++e)
            cc.diff_at_end = std::max(cc.diff_at_end, std::abs(a[e] - b[e]));
        const double gap_a = res.ladder.entries.back().sup_diff_prev;
        const double gap_b = rough.ladder.entries.back().sup_diff_prev;
        cc.allowed = 3.0 * std::max(gap_a, gap_b);
        cc.pass = res.ladder.converged && rough.ladder.converged && cc.diff_at_end <= cc.allowed;
        res.cross_check = cc;
    }
    return res;
}

RunningIntegral stieltjes_qv(const SamplePath& integrand, const RunningIntegral& bracket) {
    if (!same_grid(integrand.grid_ptr(), bracket.grid_ptr()))
        throw std::invalid_argument("stieltjes_qv: grid mismatch");
    const std::size_t entries = bracket.entry_count();
    const bool scalar = integrand.dim() == 1;
    if (!scalar && static_cast<std::size_t>(integrand.dim()) != entries)
        throw std::invalid_argument("stieltjes_qv: integrand shape matches neither scalar nor bracket");

    if (scalar) {
        RunningIntegral out(bracket.grid_ptr(), bracket.rows(), bracket.cols());
        std::vector<double> acc(entries, 0.0);
        for (std::size_t i = 0; i + 1 < bracket.length(); ++i) {
            const double w = integrand.at(i, 0);
            auto b0 = bracket.at(i);
            auto b1 = bracket.at(i + 1);
            auto row = out.at(i + 1);
            for (std::size_t e = 0; e < entries; ++e) {
                acc[e] += w * (b1[e] - b0[e]);
                row[e] = acc[e];
            }
        }
        return out;
    }
    RunningIntegral out(bracket.grid_ptr(), 1, 1);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < bracket.length(); ++i) {
        auto w = integrand.value(i);
        auto b0 = bracket.at(i);
        auto b1 = bracket.at(i + 1);
        for (std::size_t e = 0; e < entries; ++e) acc += w[e] * (b1[e] - b0[e]);
        out.at(i + 1)[0] = acc;
    }
    return out;
}

std::vector<RunningIntegral> follmer_ito_defect(const VectorFn& f, const VectorFn& df,
                                                const VectorFn& d2f, const SamplePath& x,
                                                const PartitionSequence& seq, GammaWeight gamma,
                                                int m) {
    const int d = x.dim();
    const VectorFn grad = df ? df : fd_jacobian(f, m, d);
    const VectorFn hess = d2f ? d2f : fd_jacobian(grad, m * d, d);

    // Evaluate F, DF, D2F once along the path.
    std::vector<double> fv(x.length() * static_cast<std::size_t>(m));
    std::vector<double> dfv(x.length() * static_cast<std::size_t>(m) * d);
    std::vector<double> d2fv(x.length() * static_cast<std::size_t>(m) * d * d);
    for (std::size_t i = 0; i < x.length(); ++i) {
        const auto a = f(x.value(i));
        const auto b = grad(x.value(i));
        const auto c = hess(x.value(i));
        if (a.size() != static_cast<std::size_t>(m) || b.size() != static_cast<std::size_t>(m) * d ||
            c.size() != static_cast<std::size_t>(m) * d * d)
            throw std::invalid_argument("follmer_ito_defect: F/DF/D2F output size mismatch");
        std::copy(a.begin(), a.end(), fv.begin() + static_cast<std::ptrdiff_t>(i * a.size()));
        std::copy(b.begin(), b.end(), dfv.begin() + static_cast<std::ptrdiff_t>(i * b.size()));
        std::copy(c.begin(), c.end(), d2fv.begin() + static_cast<std::ptrdiff_t>(i * c.size()));
    }
    const SamplePath df_path(x.grid_ptr(), m * d, std::move(dfv));
    const SamplePath d2f_path(x.grid_ptr(), m * d * d, std::move(d2fv));

    const double half_minus_gamma = 0.5 - gamma.value;
    std::vector<RunningIntegral> defects;
    defects.reserve(seq.size());
    for (const Partition& part : seq.levels) {
        const RunningIntegral gsum = gamma_riemann(df_path, m, x, part, gamma);
        const RunningIntegral bracket = quadratic_variation(x, part);

        RunningIntegral defect(x.grid_ptr(), m, 1);
        std::vector<double> stj(static_cast<std::size_t>(m), 0.0);
        for (std::size_t i = 0; i < x.length(); ++i) {
            if (i > 0) {
                auto b0 = bracket.at(i - 1);
                auto b1 = bracket.at(i);
                auto h = d2f_path.value(i - 1);
                for (int a = 0; a < m; ++a) {
                    double s = 0.0;
                    const std::size_t off = static_cast<std::size_t>(a) * d * d;
                    for (std::size_t e = 0; e < static_cast<std::size_t>(d) * d; ++e)
                        s += h[off + e] * (b1[e] - b0[e]);
                    stj[static_cast<std::size_t>(a)] += s;
                }
            }
            auto row = defect.at(i);
            auto gs = gsum.at(i);
            for (int a = 0; a < m; ++a)
                row[static_cast<std::size_t>(a)] =
                    fv[i * static_cast<std::size_t>(m) + a] - fv[static_cast<std::size_t>(a)] -
                    gs[static_cast<std::size_t>(a)] - half_minus_gamma * stj[static_cast<std::size_t>(a)];
        }
        defects.push_back(std::move(defect));
    }
    return defects;
}

}  // namespace pathint

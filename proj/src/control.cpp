#include "pathint/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "pathint/pvar.hpp"

namespace pathint {

std::string ControlFunction::describe() const {
    switch (kind) {
        case Kind::pvar: return "pvar(p=" + std::to_string(p) + ")";
        case Kind::hoelder: return "hoelder";
        case Kind::custom: return "custom";
    }
    return "unknown";
}

ControlFunction control_from_pvar(const SamplePath& path, double p) {
    if (p < 1.0) throw std::invalid_argument("control_from_pvar: p must be >= 1");
    ControlFunction c;
    c.kind = ControlFunction::Kind::pvar;
    c.p = p;
    c.source = std::make_shared<const SamplePath>(path);
    auto src = c.source;
    c.eval = [src, p](std::size_t s, std::size_t t) {
        if (s > t) throw std::out_of_range("control: s > t");
        if (s == t) return 0.0;
        return pvar_prefix_profile(*src, p, s, t).back();
    };
    return c;
}

ControlFunction hoelder_control(GridPtr grid, double k_const, double exponent) {
    if (exponent < 1.0) throw std::invalid_argument("hoelder_control: exponent must be >= 1");
    if (k_const < 0.0) throw std::invalid_argument("hoelder_control: K must be non-negative");
    ControlFunction c;
    c.kind = ControlFunction::Kind::hoelder;
    c.eval = [grid = std::move(grid), k_const, exponent](std::size_t s, std::size_t t) {
        if (s > t) throw std::out_of_range("control: s > t");
        return k_const * std::pow(grid->time(t) - grid->time(s), exponent);
    };
    return c;
}

ControlFunction custom_control(std::function<double(std::size_t, std::size_t)> eval) {
    ControlFunction c;
    c.kind = ControlFunction::Kind::custom;
    c.eval = std::move(eval);
    return c;
}

double superadditivity_defect(const ControlFunction& c, std::size_t grid_size, int samples,
                              std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, grid_size - 1);
    double worst = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < samples; ++it) {
        std::size_t a = pick(eng), b = pick(eng), d = pick(eng);
        std::size_t s = std::min({a, b, d});
        std::size_t t = std::max({a, b, d});
        std::size_t u = a + b + d - s - t;
        worst = std::max(worst, c.eval(s, u) + c.eval(u, t) - c.eval(s, t));
    }
    return worst;
}

BalancedRatioReport c_balanced_ratio(const PartitionSequence& seq, const ControlFunction& c) {
    BalancedRatioReport rep;
    for (const Partition& part : seq.levels) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (std::size_t k = 0; k + 1 < part.points(); ++k) {
            const double v = c.eval(part.grid_index(k), part.grid_index(k + 1));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        rep.per_level.push_back(lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity());
    }
    rep.overall = 0.0;
    for (double r : rep.per_level) rep.overall = std::max(rep.overall, r);
    return rep;
}

}  // namespace pathint

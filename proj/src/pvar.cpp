#include "pathint/pvar.hpp"

#include <cmath>
#include <stdexcept>

namespace pathint {

std::vector<double> pvar_prefix_profile(const SamplePath& path, double p, std::size_t i, std::size_t j) {
    if (p < 1.0) throw std::invalid_argument("p_variation: p must be >= 1");
    if (i > j || j >= path.length()) throw std::out_of_range("p_variation: bad window");
    const std::size_t w = j - i + 1;
    std::vector<double> v(w, 0.0);
    for (std::size_t k = 1; k < w; ++k) {
        double best = 0.0;
        for (std::size_t m = 0; m < k; ++m) {
            const double cand = v[m] + std::pow(increment_norm(path, i + m, i + k), p);
            if (cand > best) best = cand;
        }
        v[k] = best;
    }
    return v;
}

double p_variation(const SamplePath& path, double p, std::size_t i, std::size_t j) {
    if (i == j) return 0.0;
    return std::pow(pvar_prefix_profile(path, p, i, j).back(), 1.0 / p);
}

double pvar_2param(const FieldNorm& field, double r, std::size_t i, std::size_t j) {
    if (r < 1.0) throw std::invalid_argument("pvar_2param: r must be >= 1");
    if (i > j) throw std::out_of_range("pvar_2param: bad window");
    if (i == j) return 0.0;
    const std::size_t w = j - i + 1;
    std::vector<double> v(w, 0.0);
    for (std::size_t k = 1; k < w; ++k) {
        double best = 0.0;
        for (std::size_t m = 0; m < k; ++m) {
            const double cand = v[m] + std::pow(field(i + m, i + k), r);
            if (cand > best) best = cand;
        }
        v[k] = best;
    }
    return std::pow(v.back(), 1.0 / r);
}

}  // namespace pathint

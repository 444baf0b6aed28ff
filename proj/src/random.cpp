#include "pathint/random.hpp"

#include <cmath>

namespace pathint {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix64(seed ^ mix64(stream))) {}

double GaussianStream::uniform() {
    // 53-bit mantissa, shifted into (0, 1] so log() is safe.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

}  // namespace pathint

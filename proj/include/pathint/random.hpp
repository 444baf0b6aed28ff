#pragma once

#include <cstdint>
#include <random>

namespace pathint {

/// Standard-normal stream with a platform-independent draw sequence.
///
/// std::normal_distribution is implementation-defined, so frozen test values
/// would not travel between standard libraries. This uses mt19937_64 plus
/// Box-Muller, which pins every draw to the engine's output sequence.
/// Streams for the same seed but different stream ids are independent, so
/// Monte-Carlo replicates can run in any order.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed, std::uint64_t stream = 0);

    /// Next standard-normal variate.
    double next();

    /// Uniform on (0, 1].
    double uniform();

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// splitmix64 finalizer; used to decorrelate (seed, stream) pairs.
std::uint64_t mix64(std::uint64_t x);

}  // namespace pathint

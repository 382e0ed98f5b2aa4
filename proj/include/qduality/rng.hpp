#pragma once

#include <complex>
#include <cstdint>

namespace qduality {

// Portable deterministic random number generator: xoshiro256++ seeded through
// SplitMix64, with Box-Muller on top for Gaussian variates. The exact draw
// order is part of the contract so that identical seeds give bit-identical
// sample streams on every platform:
//   - uniform01() consumes one 64-bit word: (next() >> 11) * 2^-53.
//   - gaussian() consumes two uniforms per Box-Muller pair and caches the
//     second variate (cos first, sin second).
//   - complex_gaussian() draws the real part before the imaginary part.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();                 // raw 64-bit word
    std::uint64_t next_below(std::uint64_t n);  // in [0, n), modulo reduction
    double uniform01();                   // in [0, 1)
    double gaussian();                    // standard normal
    std::complex<double> complex_gaussian();  // N(0,1) + i N(0,1)

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// SplitMix64 finalizer used for seeding and stream derivation.
std::uint64_t mix64(std::uint64_t z);

// Derives an independent per-sample stream so campaign results do not depend
// on how samples are assigned to worker threads.
std::uint64_t derive_stream_seed(std::uint64_t seed, int d, std::int64_t sample_id);

}  // namespace qduality

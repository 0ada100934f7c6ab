#pragma once

#include <cmath>
#include <cstdint>

namespace geoaffine {

// SplitMix64 based generator. Used instead of <random> engines so that
// sampled values are identical across standard library implementations,
// which keeps seeded report files byte-identical.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // decorrelate trivially related seeds
        next_u64();
        next_u64();
    }

    // Independent stream for one sample index; parallel scans draw from
    // per-index streams so the merge order cannot change the outcome.
    static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
        return Rng(seed ^ (0x9E3779B97F4A7C15ull + index * 0xBF58476D1CE4E5B9ull));
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // standard normal via Box-Muller (pairwise, deterministic)
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform01(); // (0, 1]
        double u2 = uniform01();
        double rad = std::sqrt(-2.0 * std::log(u1));
        double ang = 6.283185307179586476925286766559 * u2;
        spare_ = rad * std::sin(ang);
        have_spare_ = true;
        return rad * std::cos(ang);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace geoaffine

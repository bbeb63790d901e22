#pragma once
#include <cmath>
#include <cstdint>

namespace switchsim {

// splitmix64: used only to expand (seed, stream) pairs into generator state.
inline std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// PCG32 (XSH-RR). Small state, fast, and streams are cheap to split: the
// generator for path k is a pure function of (seed, k), so replications can
// be distributed across workers without coordination and still reduce to the
// same result in path-index order.
class Pcg32 {
  public:
    Pcg32() : Pcg32(0x853C49E6748FEA9BULL, 0xDA3E39CB94B95BDBULL) {}
    Pcg32(std::uint64_t seed, std::uint64_t stream) { reseed(seed, stream); }

    void reseed(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed ^ (stream * 0x9E3779B97F4A7C15ULL);
        std::uint64_t s0 = splitmix64(z);
        std::uint64_t s1 = splitmix64(z);
        state_ = 0;
        inc_ = (s1 << 1u) | 1u;
        next_u32();
        state_ += s0;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // (0,1]: safe under log()
    double uniform() { return (static_cast<double>(next_u32()) + 1.0) * 0x1p-32; }
    // [0,1): safe for inverse-cdf comparisons
    double uniform_co() { return static_cast<double>(next_u32()) * 0x1p-32; }

    double exponential(double mean) { return -std::log(uniform()) * mean; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double x, y, r2;
        do {
            x = 2.0 * uniform_co() - 1.0;
            y = 2.0 * uniform_co() - 1.0;
            r2 = x * x + y * y;
        } while (r2 >= 1.0 || r2 == 0.0);
        double f = std::sqrt(-2.0 * std::log(r2) / r2);
        spare_ = y * f;
        have_spare_ = true;
        return x * f;
    }

    // Marsaglia-Tsang; a > 0, unit scale.
    double gamma(double a) {
        if (a < 1.0) {
            // boost: G(a) = G(a+1) * U^{1/a}
            double u = uniform();
            return gamma(a + 1.0) * std::pow(u, 1.0 / a);
        }
        double d = a - 1.0 / 3.0;
        double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double beta(double a, double b) {
        double x = gamma(a);
        double y = gamma(b);
        return x / (x + y);
    }

  private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 1;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stream for replication k of a run keyed by seed.
inline Pcg32 path_rng(std::uint64_t seed, std::uint64_t k) { return Pcg32(seed, k); }

}  // namespace switchsim

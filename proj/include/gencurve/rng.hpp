#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "gencurve/common.hpp"

namespace gencurve {

// Deterministic RNG. Uniform/normal draws are mapped explicitly from the raw
// engine output (std::*_distribution is implementation-defined and would break
// the bit-reproducibility contract).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // [0, 1)
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        // modulo bias is < 2^-40 for any n we use; acceptable and reproducible
        return engine_() % n;
    }

    // Box-Muller; caches the second variate.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    void fill_normal(Vec& v, double sigma = 1.0) {
        for (auto& x : v) x = float(sigma * normal());
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Named sub-stream derivation: every component draws from its own stream so
// adding draws in one place never perturbs another.
inline std::uint64_t substream_seed(std::uint64_t root, std::string_view name) {
    std::uint64_t h = fnv1a64(name.data(), name.size());
    h ^= root + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace gencurve

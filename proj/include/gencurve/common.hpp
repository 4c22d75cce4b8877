#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gencurve {

using Vec = std::vector<float>;

// Bad parameters, config files, CLI usage. CLI maps these to exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed binary/text inputs; message carries the byte offset.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

// Non-finite losses, diverging optimizations, failed factorizations. Exit 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse (non-adjacent grid pair, wrong head, shape mismatch).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_same_shape(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw UsageError(std::string(what) + ": shape mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
    }
}

inline double dot(std::span<const float> a, std::span<const float> b) {
    require_same_shape(a.size(), b.size(), "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += double(a[i]) * double(b[i]);
    return s;
}

inline double norm2(std::span<const float> a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(std::span<const float> a) {
    double m = 0.0;
    for (float x : a) m = std::max(m, double(std::fabs(x)));
    return m;
}

// y += alpha * x
inline void axpy(double alpha, std::span<const float> x, Vec& y) {
    require_same_shape(x.size(), y.size(), "axpy");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = float(double(y[i]) + alpha * double(x[i]));
}

inline Vec scaled(std::span<const float> x, double alpha) {
    Vec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = float(alpha * double(x[i]));
    return y;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t hash_floats(std::span<const float> v, std::uint64_t seed = 0xcbf29ce484222325ull) {
    return fnv1a64(v.data(), v.size() * sizeof(float), seed);
}

// Runs fn(i) for i in [0, n). Work is split into fixed-size chunks so results
// do not depend on the worker count; GENCURVE_THREADS caps parallelism.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Shortest round-trip decimal for CSV output.
std::string format_float(float v);
std::string format_double(double v);

}  // namespace gencurve

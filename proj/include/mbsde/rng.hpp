#pragma once
#include <cmath>
#include <cstdint>
#include <Eigen/Dense>

namespace mbsde {

/// Counter-based PRNG: every draw is a pure function of (seed, stream, counter).
///
/// All randomness in the project flows through instances of this class; there
/// is no global RNG state. Independent streams are derived from the same seed
/// by the stream index, so work items of a parallel loop can each own stream
/// `i` and produce values that do not depend on scheduling.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    uint64_t next_u64() {
        uint64_t x = seed_ + 0x9E3779B97F4A7C15ull * (counter_++ + 1)
                   + 0xC2B2AE3D27D4EB4Full * (stream_ + 1);
        return mix(mix(x) ^ 0xD6E8FEB86659FD93ull);
    }

    /// Uniform in [0,1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    Eigen::VectorXd normal_vec(int n) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = normal();
        return v;
    }

    Eigen::MatrixXd normal_mat(int rows, int cols) {
        Eigen::MatrixXd m(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) m(i, j) = normal();
        return m;
    }

    /// Uniform direction on the unit sphere of R^n.
    Eigen::VectorXd direction(int n) {
        for (;;) {
            Eigen::VectorXd v = normal_vec(n);
            double s = v.norm();
            if (s > 1e-12) return v / s;
        }
    }

    /// Uniform point in the unit ball of R^n.
    Eigen::VectorXd in_ball(int n) {
        return direction(n) * std::pow(uniform(), 1.0 / n);
    }

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }

private:
    static uint64_t mix(uint64_t x) {
        x ^= x >> 30; x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27; x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

    uint64_t seed_;
    uint64_t stream_;
    uint64_t counter_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Halton low-discrepancy sequence, used for deterministic domain sweeps.
inline double halton(uint64_t index, uint64_t base) {
    double f = 1.0, r = 0.0;
    uint64_t i = index + 1;
    while (i > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

/// Point of the n-dimensional Halton sequence in [0,1)^n (first 8 primes).
inline Eigen::VectorXd halton_point(uint64_t index, int n) {
    static const uint64_t primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    Eigen::VectorXd v(n);
    for (int k = 0; k < n; ++k) v[k] = halton(index, primes[k % 8]);
    return v;
}

} // namespace mbsde

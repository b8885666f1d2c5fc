#ifndef GESOLVE_RNG_HPP
#define GESOLVE_RNG_HPP

#include <Eigen/Core>
#include <cmath>
#include <cstdint>

namespace gesolve {

// Deterministic splitmix64-based generator. We avoid std::*_distribution so
// that streams are identical across standard library implementations, and we
// derive per-sample streams from (seed, index) so sampling loops can be
// reordered or parallelized without changing results.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9E3779B97F4A7C15ull) {}

    static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed ^ mix(index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    Eigen::VectorXd normal_vector(int n) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = normal();
        return v;
    }

    /// Uniform in the Euclidean ball of the given radius.
    Eigen::VectorXd ball(int n, double radius) {
        Eigen::VectorXd v = normal_vector(n);
        double norm = v.norm();
        if (norm < 1e-300) return Eigen::VectorXd::Zero(n);
        double r = radius * std::pow(uniform01(), 1.0 / n);
        return v * (r / norm);
    }

    Eigen::VectorXd sphere(int n) {
        Eigen::VectorXd v = normal_vector(n);
        double norm = v.norm();
        if (norm < 1e-300) {
            v.setZero();
            v[0] = 1.0;
            return v;
        }
        return v / norm;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace gesolve

#endif

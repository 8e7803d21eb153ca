#pragma once

#include <cstdint>
#include <cmath>

#include "tetsym/linalg3.hpp"

// Deterministic, platform-independent sampling. std:: distributions are not
// used because their output is implementation-defined; the byte-identical
// reproducibility contract of the sweep reports requires exact streams.

namespace tetsym {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Independent stream per (seed, index) pair, so samples of a sweep can be
// evaluated in any order or in parallel without changing the draw.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    g.next();
    return g.next();
}

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}
    SampleRng(std::uint64_t seed, std::uint64_t index) : gen_(derive_stream_seed(seed, index)) {}

    std::uint64_t next_u64() { return gen_.next(); }

    // Uniform in [0, 1).
    double uniform01() { return double(gen_.next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    // Uniform on the unit sphere.
    Vec3 unit_vector() {
        double z = 1.0 - 2.0 * uniform01();
        double phi = 2.0 * M_PI * uniform01();
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

    Vec3 in_box(double half_extent) {
        return {uniform(-half_extent, half_extent),
                uniform(-half_extent, half_extent),
                uniform(-half_extent, half_extent)};
    }

    // Uniform random rotation (Shoemake's quaternion method).
    Mat3 rotation() {
        double u1 = uniform01(), u2 = uniform01(), u3 = uniform01();
        double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
        double qx = a * std::sin(2.0 * M_PI * u2);
        double qy = a * std::cos(2.0 * M_PI * u2);
        double qz = b * std::sin(2.0 * M_PI * u3);
        double qw = b * std::cos(2.0 * M_PI * u3);
        Mat3 r;
        r.m[0][0] = 1 - 2 * (qy * qy + qz * qz);
        r.m[0][1] = 2 * (qx * qy - qz * qw);
        r.m[0][2] = 2 * (qx * qz + qy * qw);
        r.m[1][0] = 2 * (qx * qy + qz * qw);
        r.m[1][1] = 1 - 2 * (qx * qx + qz * qz);
        r.m[1][2] = 2 * (qy * qz - qx * qw);
        r.m[2][0] = 2 * (qx * qz - qy * qw);
        r.m[2][1] = 2 * (qy * qz + qx * qw);
        r.m[2][2] = 1 - 2 * (qx * qx + qy * qy);
        return r;
    }

private:
    SplitMix64 gen_;
};

} // namespace tetsym

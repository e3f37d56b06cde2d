#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace gyrokit {

/// Deterministic random source. mt19937_64 has a fully specified output
/// sequence, and we map raw bits to doubles ourselves, so two runs with the
/// same seed produce identical samples on any conforming implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    /// Standard normal via Marsaglia's polar method.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_unit() - 1.0;
            v = 2.0 * next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    /// Uniform point in the n-ball of given radius.
    std::vector<double> next_in_ball(std::size_t n, double radius) {
        std::vector<double> p(n);
        double norm2 = 0.0;
        for (auto& x : p) {
            x = next_gaussian();
            norm2 += x * x;
        }
        const double norm = std::sqrt(norm2);
        const double r = radius * std::pow(next_unit(), 1.0 / static_cast<double>(n));
        if (norm == 0.0) {
            for (auto& x : p) x = 0.0;
            return p;
        }
        for (auto& x : p) x *= r / norm;
        return p;
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gyrokit

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ncmap {

/// Identifier of the pseudo-random scheme used for all noise draws.
/// Recorded in run manifests so results can be reproduced elsewhere.
inline constexpr const char* kRngAlgorithm = "mt19937_64+box-muller";

/// Seeded stream of standard-normal samples.
///
/// Uses the fully specified mt19937_64 generator with an explicit
/// Box-Muller transform instead of std::normal_distribution, whose output
/// sequence is implementation-defined.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1): 53-bit mantissas from one 64-bit draw each
        const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Seeded stream of uniform doubles in [lo, hi), used for deterministic
/// sample-point generation in verification suites.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : gen_(seed) {}

    double next(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// Random sign, +1.0 or -1.0.
    double sign() { return (gen_() & 1u) ? 1.0 : -1.0; }

private:
    std::mt19937_64 gen_;
};

} // namespace ncmap

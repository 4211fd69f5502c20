#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "ncmap/rng.hpp"
#include "ncmap/vec.hpp"

namespace ncmap {

/// Scalar cost function on R^n with exact evaluation counting.
///
/// The optional analytic gradient exists for verification oracles and
/// gradient-descent baselines only; the derivative-free algorithms never
/// touch it. `value` is the counted measurement channel the algorithms
/// query; `probe` evaluates without counting and is reserved for
/// diagnostics (trajectory cost columns, Lyapunov probes, band measures).
///
/// The counter (and the noise stream of the noisy wrapper) is per-instance
/// and unsynchronized: concurrent runs must each own their objective.
class Objective {
public:
    using EvalFn = std::function<double(std::span<const double>)>;
    using GradFn = std::function<Vec(std::span<const double>)>;

    Objective(std::size_t dimension, EvalFn eval, GradFn gradient = nullptr,
              std::string label = "custom");

    std::size_t dimension() const { return dim_; }
    const std::string& label() const { return label_; }

    /// Counted evaluation (one increment per call).
    double value(std::span<const double> x) const;

    /// Uncounted diagnostic evaluation.
    double probe(std::span<const double> x) const;

    bool has_gradient() const { return static_cast<bool>(grad_); }
    Vec gradient(std::span<const double> x) const;

    std::uint64_t eval_count() const { return evals_; }
    void reset_eval_count() { evals_ = 0; }

    /// Known minimizer, when the problem has a unique one (benchmark
    /// diagnostics only; never consulted by the optimizer).
    const std::optional<Vec>& minimizer() const { return minimizer_; }
    void set_minimizer(Vec x_star) { minimizer_ = std::move(x_star); }

private:
    void check_point(std::span<const double> x) const;

    std::size_t dim_;
    EvalFn eval_;
    GradFn grad_;
    std::string label_;
    std::optional<Vec> minimizer_;
    mutable std::uint64_t evals_ = 0;
};

/// J(x) = curvature * sum_i (x_i - center_i)^2 + offset, with analytic
/// gradient 2 * curvature * (x - center) and minimizer at `center`.
Objective make_quadratic(Vec center, double offset, double curvature = 1.0);

/// J(x) = sum_i (x_i^2 - 1)^2. Smooth but non-convex: two symmetric wells
/// per coordinate at +-1 and no unique global minimizer, so it sits outside
/// the single-minimum problem class the convergence guarantees assume.
/// Included for exploratory runs only.
Objective make_double_well(std::size_t dimension);

/// J(x) = c everywhere (zero-drift edge case).
Objective make_constant(std::size_t dimension, double value);

/// Objective wrapper adding one independent Gaussian perturbation per
/// counted evaluation: every query returns base(x) + sigma * z. The probe
/// channel stays noise-free. sigma = 0 bypasses the noise stream entirely
/// and is bit-identical to the base objective.
class NoisyObjective {
public:
    NoisyObjective(Objective base, double sigma, std::uint64_t seed);

    std::size_t dimension() const { return base_.dimension(); }
    const std::string& label() const { return base_.label(); }

    double value(std::span<const double> x) const;
    double probe(std::span<const double> x) const { return base_.probe(x); }

    std::uint64_t eval_count() const { return base_.eval_count(); }
    void reset_eval_count() { base_.reset_eval_count(); }

    const Objective& base() const { return base_; }
    double sigma() const { return sigma_; }
    std::uint64_t seed() const { return seed_; }

private:
    Objective base_;
    double sigma_;
    std::uint64_t seed_;
    mutable GaussianStream noise_;
};

NoisyObjective with_noise(Objective base, double sigma, std::uint64_t seed);

/// Anything the derivative-free algorithms can drive: a counted measurement
/// channel plus an uncounted diagnostic probe.
template <class T>
concept ObjectiveLike = requires(const T& o, std::span<const double> x) {
    { o.dimension() } -> std::convertible_to<std::size_t>;
    { o.value(x) } -> std::convertible_to<double>;
    { o.probe(x) } -> std::convertible_to<double>;
    { o.eval_count() } -> std::convertible_to<std::uint64_t>;
};

} // namespace ncmap

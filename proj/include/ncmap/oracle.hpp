#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncmap/fields.hpp"
#include "ncmap/objective.hpp"
#include "ncmap/optimizer.hpp"
#include "ncmap/stepper.hpp"
#include "ncmap/vec.hpp"

namespace ncmap::oracle {

/// A finite-difference evaluation hit a non-finite value.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Central-difference step balancing truncation against rounding at
/// double precision.
inline constexpr double kDefaultFdStep = 1e-6;

/// Central finite-difference gradient of a scalar field.
Vec fd_gradient(const std::function<double(std::span<const double>)>& f,
                std::span<const double> x, double step = kDefaultFdStep);

/// Gradient of the objective itself, via the uncounted probe channel.
Vec fd_gradient(const Objective& obj, std::span<const double> x,
                double step = kDefaultFdStep);

/// Composed scalar field x -> f_i(J(x)) of a pair bound to an objective
/// (which = 1 or 2), evaluated through the probe channel.
std::function<double(std::span<const double>)>
composed_field(const GeneratingPair& pair, int which, const Objective& obj);

/// Commutator [field1, field2] = grad(field2) * field1 - grad(field1) * field2
/// of the composed scalar fields, all derivatives by central differences.
Vec bracket(const GeneratingPair& pair, const Objective& obj,
            std::span<const double> x, double step = kDefaultFdStep);

/// Predicted per-unit-h macro drift of a composed 4n-step sweep.
enum class MacroDrift {
    euler,         // [f1,f2] - grad(f1) f1 - grad(f2) f2
    heun,          // [f1,f2]
    neg_gradient,  // -grad J (the target the valid pairs reproduce)
};

MacroDrift drift_for(StepMethod method);

Vec descent_expression(const GeneratingPair& pair, MacroDrift which,
                       const Objective& obj, std::span<const double> x,
                       double step = kDefaultFdStep);

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least-squares line through (log h, log r) points. Requires >= 2 points
/// with positive coordinates.
LogLogFit fit_loglog(std::span<const std::pair<double, double>> points);

/// Macro-step residual r(h) = |end(h) - x - h D(x)| fitted against h on a
/// log-log line. Residuals below the exact-cancellation floor are excluded
/// from the fit and listed separately.
struct ResidualFit {
    std::vector<std::pair<double, double>> samples;  // (h, residual) kept
    std::vector<double> cancelled;                   // h flagged exact-cancellation
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;

    bool all_cancelled() const { return samples.empty() && !cancelled.empty(); }
    bool conclusive(double min_slope = 1.4, double min_r2 = 0.98) const {
        return !samples.empty() && slope >= min_slope && r_squared >= min_r2;
    }
};

inline constexpr double kCancellationFloor = 1e-13;

/// Drift matched to the integration method.
ResidualFit residual_order(const GeneratingPair& pair, StepMethod method,
                           const Objective& obj, std::span<const double> x,
                           std::span<const double> h_grid);

/// Explicit drift choice, e.g. deliberately mismatched controls.
ResidualFit residual_order(const GeneratingPair& pair, StepMethod method,
                           const Objective& obj, std::span<const double> x,
                           std::span<const double> h_grid, MacroDrift drift);

/// Empirical validity flags for a pair of scalar maps: a flag holds when
/// the corresponding drift expression matches -grad J to 1e-3 at 100
/// sampled points of two reference quadratics.
std::pair<bool, bool> classify_pair(const GeneratingPair& pair);

/// Classify and register a user pair in one step; returns the stored pair
/// with measured flags (the caller's flag values are ignored).
GeneratingPair register_classified_pair(std::string label,
                                        std::function<double(double)> f1,
                                        std::function<double(double)> f2);

/// x_{k+1} = x_k - h grad J(x_k). Requires an analytic gradient.
Trajectory baseline_exact_gd(const Objective& obj, Vec x0, double h,
                             std::uint64_t steps);

/// Forward-difference descent: per coordinate D_i = (J(x + h e_i) - J(x)) / h,
/// then x_{k+1} = x_k - h D. Descent-correct orientation; n+1 counted
/// evaluations per step, so noise enters every quotient.
template <ObjectiveLike O>
Trajectory baseline_fd_gd(const O& obj, Vec x0, double h, std::uint64_t steps);

/// Decrease probe for V(x) = J(x) - J(x_star) across aligned 4n-step
/// boundaries, counting violations only outside the measured limit band.
struct LyapunovProbe {
    std::size_t boundaries_checked = 0;
    std::size_t violations = 0;
    double band = 0.0;
};

LyapunovProbe lyapunov_decrease(const Trajectory& traj, const Objective& base,
                                std::span<const double> x_star, std::size_t window);

// --- template implementation ---

namespace detail {

void seed_baseline_records(Trajectory& traj, const Vec& x0, double cost0);
void append_baseline_record(Trajectory& traj, const Vec& x, double cost,
                            std::uint64_t evals);

} // namespace detail

template <ObjectiveLike O>
Trajectory baseline_fd_gd(const O& obj, Vec x0, double h, std::uint64_t steps) {
    if (!(h > 0.0)) throw std::invalid_argument("baseline_fd_gd: h must be positive");
    if (x0.size() != obj.dimension())
        throw std::invalid_argument("baseline_fd_gd: x0 dimension mismatch");
    const std::size_t n = x0.size();
    const std::uint64_t evals_at_start = obj.eval_count();

    Trajectory traj;
    detail::seed_baseline_records(traj, x0, obj.probe(x0));
    Vec x = std::move(x0);
    Vec shifted(n);
    Vec quotient(n);
    for (std::uint64_t k = 0; k < steps; ++k) {
        const double j0 = obj.value(x);
        shifted.assign(x.begin(), x.end());
        for (std::size_t i = 0; i < n; ++i) {
            shifted[i] = x[i] + h;
            quotient[i] = obj.value(shifted) - j0;  // h * D_i
            shifted[i] = x[i];
        }
        for (std::size_t i = 0; i < n; ++i) x[i] -= quotient[i];
        if (!all_finite(x)) {
            traj.status = RunStatus::diverged;
            break;
        }
        traj.steps_taken = k + 1;
        detail::append_baseline_record(traj, x, obj.probe(x),
                                       obj.eval_count() - evals_at_start);
    }
    return traj;
}

} // namespace ncmap::oracle

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncmap/fields.hpp"
#include "ncmap/objective.hpp"
#include "ncmap/stepper.hpp"
#include "ncmap/vec.hpp"

namespace ncmap {

struct OptimizerConfig {
    StepMethod method = StepMethod::euler;
    std::string pair = "sincos";
    double h = 0.1;
    Vec x0;
    std::uint64_t max_steps = 1000;  // micro-step budget

    /// Early stop: halt once the filtered iterate moves by at most
    /// stop_tau across 3 consecutive sweeps of 4n steps. 0 disables.
    double stop_tau = 0.0;

    /// When false, only the first and last entries of each series are
    /// kept (long runs with O(1) memory).
    bool record_series = true;

    void validate(std::size_t obj_dimension) const;
};

/// Moving average over the last `window` iterate increments. The window
/// starts filled with zeros, matching an iterate history frozen at x0
/// before step 0. Smoothed output only: never fed back into the iterates.
class IncrementFilter {
public:
    IncrementFilter(Vec y0, std::size_t window);

    /// Advance y by the mean of the window after admitting `increment`.
    void push(std::span<const double> increment);

    const Vec& value() const { return y_; }
    std::size_t window() const { return ring_.size(); }

private:
    Vec y_;
    std::vector<Vec> ring_;
    std::size_t pos_ = 0;
};

enum class RunStatus { completed, filter_converged, diverged };

std::string_view to_string(RunStatus s);

/// Per-micro-step record of a run. All series share one length; entry k
/// holds the iterate after k steps, its filtered counterpart, the schedule
/// labels at index k, the true (uncounted) objective value, and the
/// cumulative counted evaluations spent so far.
struct Trajectory {
    std::vector<Vec> x;
    std::vector<Vec> y;
    std::vector<int> phase;
    std::vector<std::size_t> coordinate;
    std::vector<double> cost;
    std::vector<std::uint64_t> evals;
    RunStatus status = RunStatus::completed;
    std::uint64_t steps_taken = 0;

    std::size_t size() const { return x.size(); }
};

/// Largest distance to x_star over the last `window` iterates: the
/// empirical radius of the residual oscillation. Benchmark diagnostic;
/// x_star comes from the problem definition, not the optimizer.
double limit_band(const Trajectory& traj, std::size_t window,
                  std::span<const double> x_star);

namespace detail {

void append_record(Trajectory& traj, const Vec& x, const Vec& y, std::uint64_t k,
                   const SwitchedField& sf, double cost, std::uint64_t evals,
                   bool record_series);

} // namespace detail

/// Full iteration loop: micro-steps under the periodic switching schedule,
/// filter update per step, divergence guard, optional macro-aligned early
/// stop. A diverged run returns the partial trajectory with its status set
/// rather than throwing.
template <ObjectiveLike O>
Trajectory run(const O& obj, const OptimizerConfig& cfg) {
    cfg.validate(obj.dimension());
    const SwitchedField sf(pair_by_name(cfg.pair), obj.dimension());
    const std::size_t n = obj.dimension();
    const std::uint64_t sweep = 4 * static_cast<std::uint64_t>(n);
    const double guard_radius = 1e6 * (1.0 + norm(cfg.x0));
    const std::uint64_t evals_at_start = obj.eval_count();

    Vec x = cfg.x0;
    IncrementFilter filter(cfg.x0, sweep);
    Vec increment(n, 0.0);

    Trajectory traj;
    traj.x.reserve(cfg.record_series ? cfg.max_steps + 1 : 2);
    detail::append_record(traj, x, filter.value(), 0, sf, obj.probe(x), 0, true);

    Vec y_prev_sweep = filter.value();
    int quiet_sweeps = 0;

    for (std::uint64_t k = 0; k < cfg.max_steps; ++k) {
        Vec x_prev = x;
        const double measured = micro_step_inplace(sf, cfg.method, obj, k, cfg.h, x);

        if (!std::isfinite(measured) || !all_finite(x)) {
            traj.status = RunStatus::diverged;
            break;
        }

        for (std::size_t i = 0; i < n; ++i) increment[i] = x[i] - x_prev[i];
        filter.push(increment);

        traj.steps_taken = k + 1;
        detail::append_record(traj, x, filter.value(), k + 1, sf, obj.probe(x),
                              obj.eval_count() - evals_at_start, cfg.record_series);

        if (norm(x) > guard_radius) {
            traj.status = RunStatus::diverged;
            break;
        }

        if ((k + 1) % sweep == 0) {
            if (cfg.stop_tau > 0.0) {
                quiet_sweeps = distance(filter.value(), y_prev_sweep) <= cfg.stop_tau
                                   ? quiet_sweeps + 1
                                   : 0;
                if (quiet_sweeps >= 3) {
                    traj.status = RunStatus::filter_converged;
                    break;
                }
            }
            y_prev_sweep = filter.value();
        }
    }
    return traj;
}

} // namespace ncmap

#include "ncmap/optimizer.hpp"

#include <stdexcept>

namespace ncmap {

void OptimizerConfig::validate(std::size_t obj_dimension) const {
    if (!(h > 0.0)) throw std::invalid_argument("OptimizerConfig: h must be positive");
    if (max_steps < 1) throw std::invalid_argument("OptimizerConfig: max_steps must be >= 1");
    if (stop_tau < 0.0) throw std::invalid_argument("OptimizerConfig: stop_tau must be >= 0");
    if (x0.size() != obj_dimension)
        throw std::invalid_argument("OptimizerConfig: x0 has dimension " +
                                    std::to_string(x0.size()) + ", objective expects " +
                                    std::to_string(obj_dimension));
}

IncrementFilter::IncrementFilter(Vec y0, std::size_t window) : y_(std::move(y0)) {
    if (window == 0) throw std::invalid_argument("IncrementFilter: window must be positive");
    ring_.assign(window, Vec(y_.size(), 0.0));
}

void IncrementFilter::push(std::span<const double> increment) {
    if (increment.size() != y_.size())
        throw std::invalid_argument("IncrementFilter: increment dimension mismatch");
    ring_[pos_].assign(increment.begin(), increment.end());
    pos_ = (pos_ + 1) % ring_.size();
    // Window sum recomputed fresh each push; the window is tiny (4n) and
    // this avoids drift from incremental add/subtract updates.
    const double scale = 1.0 / static_cast<double>(ring_.size());
    for (std::size_t i = 0; i < y_.size(); ++i) {
        double sum = 0.0;
        for (const Vec& inc : ring_) sum += inc[i];
        y_[i] += scale * sum;
    }
}

std::string_view to_string(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::filter_converged: return "filter_converged";
        case RunStatus::diverged: return "diverged";
    }
    return "unknown";
}

double limit_band(const Trajectory& traj, std::size_t window,
                  std::span<const double> x_star) {
    if (window == 0 || window >= traj.size())
        throw std::invalid_argument("limit_band: window must be in [1, trajectory length)");
    double band = 0.0;
    for (std::size_t i = traj.size() - window; i < traj.size(); ++i) {
        const double d = distance(traj.x[i], x_star);
        if (d > band) band = d;
    }
    return band;
}

namespace detail {

void append_record(Trajectory& traj, const Vec& x, const Vec& y, std::uint64_t k,
                   const SwitchedField& sf, double cost, std::uint64_t evals,
                   bool record_series) {
    const int p = SwitchedField::phase(k);
    const std::size_t c = sf.active_coordinate(k);
    if (!record_series && traj.x.size() >= 2) {
        traj.x.back() = x;
        traj.y.back() = y;
        traj.phase.back() = p;
        traj.coordinate.back() = c;
        traj.cost.back() = cost;
        traj.evals.back() = evals;
        return;
    }
    traj.x.push_back(x);
    traj.y.push_back(y);
    traj.phase.push_back(p);
    traj.coordinate.push_back(c);
    traj.cost.push_back(cost);
    traj.evals.push_back(evals);
}

} // namespace detail

} // namespace ncmap

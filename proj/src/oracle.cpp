#include "ncmap/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "ncmap/rng.hpp"

namespace ncmap::oracle {

Vec fd_gradient(const std::function<double(std::span<const double>)>& f,
                std::span<const double> x, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("fd_gradient: step must be positive");
    Vec g(x.size());
    Vec z(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = x[i] + step;
        const double fp = f(z);
        z[i] = x[i] - step;
        const double fm = f(z);
        z[i] = x[i];
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw OracleError("fd_gradient: non-finite evaluation near sample point");
        g[i] = (fp - fm) / (2.0 * step);
    }
    return g;
}

Vec fd_gradient(const Objective& obj, std::span<const double> x, double step) {
    return fd_gradient([&obj](std::span<const double> z) { return obj.probe(z); }, x,
                       step);
}

std::function<double(std::span<const double>)>
composed_field(const GeneratingPair& pair, int which, const Objective& obj) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("composed_field: which must be 1 or 2");
    const auto map = which == 1 ? pair.f1 : pair.f2;
    return [map, &obj](std::span<const double> z) { return map(obj.probe(z)); };
}

Vec bracket(const GeneratingPair& pair, const Objective& obj,
            std::span<const double> x, double step) {
    const auto field1 = composed_field(pair, 1, obj);
    const auto field2 = composed_field(pair, 2, obj);
    const double v1 = field1(x);
    const double v2 = field2(x);
    const Vec g1 = fd_gradient(field1, x, step);
    const Vec g2 = fd_gradient(field2, x, step);
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = g2[i] * v1 - g1[i] * v2;
    return out;
}

MacroDrift drift_for(StepMethod method) {
    return method == StepMethod::euler ? MacroDrift::euler : MacroDrift::heun;
}

Vec descent_expression(const GeneratingPair& pair, MacroDrift which,
                       const Objective& obj, std::span<const double> x, double step) {
    if (which == MacroDrift::neg_gradient) {
        Vec g = fd_gradient(obj, x, step);
        for (double& gi : g) gi = -gi;
        return g;
    }
    Vec out = bracket(pair, obj, x, step);
    if (which == MacroDrift::euler) {
        const auto field1 = composed_field(pair, 1, obj);
        const auto field2 = composed_field(pair, 2, obj);
        const double v1 = field1(x);
        const double v2 = field2(x);
        const Vec g1 = fd_gradient(field1, x, step);
        const Vec g2 = fd_gradient(field2, x, step);
        for (std::size_t i = 0; i < x.size(); ++i) out[i] -= g1[i] * v1 + g2[i] * v2;
    }
    return out;
}

LogLogFit fit_loglog(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2)
        throw std::invalid_argument("fit_loglog: need at least 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(points.size());
    for (const auto& [h, r] : points) {
        if (!(h > 0.0) || !(r > 0.0))
            throw std::invalid_argument("fit_loglog: points must be positive");
        const double lx = std::log(h);
        const double ly = std::log(r);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    LogLogFit fit;
    const double denom = m * sxx - sx * sx;
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / m;
    for (const auto& [h, r] : points) {
        const double ly = std::log(r);
        const double pred = fit.intercept + fit.slope * std::log(h);
        ss_res += (ly - pred) * (ly - pred);
        ss_tot += (ly - mean_y) * (ly - mean_y);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

ResidualFit residual_order(const GeneratingPair& pair, StepMethod method,
                           const Objective& obj, std::span<const double> x,
                           std::span<const double> h_grid) {
    return residual_order(pair, method, obj, x, h_grid, drift_for(method));
}

ResidualFit residual_order(const GeneratingPair& pair, StepMethod method,
                           const Objective& obj, std::span<const double> x,
                           std::span<const double> h_grid, MacroDrift drift) {
    if (h_grid.size() < 5)
        throw std::invalid_argument("residual_order: need at least 5 h values");
    for (std::size_t i = 0; i + 1 < h_grid.size(); ++i)
        if (!(h_grid[i] > h_grid[i + 1]))
            throw std::invalid_argument("residual_order: h grid must be strictly decreasing");
    if (!(h_grid.front() / h_grid.back() >= 100.0))
        throw std::invalid_argument("residual_order: h grid must span at least 2 decades");

    const SwitchedField sf(pair, obj.dimension());
    const Vec d = descent_expression(pair, drift, obj, x);

    ResidualFit fit;
    for (const double h : h_grid) {
        const MacroStepRecord rec = macro_step(sf, method, obj, h, 0, x);
        double r2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double e = rec.end[i] - x[i] - h * d[i];
            r2 += e * e;
        }
        const double r = std::sqrt(r2);
        if (!std::isfinite(r)) throw OracleError("residual_order: non-finite residual");
        if (r < kCancellationFloor)
            fit.cancelled.push_back(h);
        else
            fit.samples.emplace_back(h, r);
    }
    if (fit.samples.size() >= 2) {
        const LogLogFit line = fit_loglog(fit.samples);
        fit.slope = line.slope;
        fit.intercept = line.intercept;
        fit.r_squared = line.r_squared;
    }
    return fit;
}

std::pair<bool, bool> classify_pair(const GeneratingPair& pair) {
    // Two reference quadratics; 50 deterministic points each.
    const Objective q1 = make_quadratic({2.0}, 6.0);
    const Objective q2 = make_quadratic({2.0, 2.0}, 6.0);
    constexpr double kTol = 1e-3;

    bool euler_ok = true;
    bool heun_ok = true;
    UniformStream points(20260811u);
    for (const Objective* obj : {&q1, &q2}) {
        const std::size_t n = obj->dimension();
        for (int trial = 0; trial < 50; ++trial) {
            Vec x(n);
            for (double& xi : x) xi = points.next(-1.0, 4.0);
            const Vec g = fd_gradient(*obj, x);
            for (const MacroDrift which : {MacroDrift::euler, MacroDrift::heun}) {
                const Vec d = descent_expression(pair, which, *obj, x);
                double err = 0.0;
                for (std::size_t i = 0; i < n; ++i) err += (d[i] + g[i]) * (d[i] + g[i]);
                if (std::sqrt(err) > kTol)
                    (which == MacroDrift::euler ? euler_ok : heun_ok) = false;
            }
        }
    }
    return {euler_ok, heun_ok};
}

GeneratingPair register_classified_pair(std::string label,
                                        std::function<double(double)> f1,
                                        std::function<double(double)> f2) {
    GeneratingPair pair{std::move(f1), std::move(f2), std::move(label), false, false};
    const auto [euler_ok, heun_ok] = classify_pair(pair);
    pair.valid_for_euler = euler_ok;
    pair.valid_for_heun = heun_ok;
    register_pair(pair);
    return pair;
}

Trajectory baseline_exact_gd(const Objective& obj, Vec x0, double h,
                             std::uint64_t steps) {
    if (!(h > 0.0)) throw std::invalid_argument("baseline_exact_gd: h must be positive");
    if (!obj.has_gradient())
        throw std::invalid_argument(
            "baseline_exact_gd: objective has no analytic gradient");
    if (x0.size() != obj.dimension())
        throw std::invalid_argument("baseline_exact_gd: x0 dimension mismatch");

    Trajectory traj;
    detail::seed_baseline_records(traj, x0, obj.probe(x0));
    Vec x = std::move(x0);
    for (std::uint64_t k = 0; k < steps; ++k) {
        const Vec g = obj.gradient(x);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= h * g[i];
        if (!all_finite(x)) {
            traj.status = RunStatus::diverged;
            break;
        }
        traj.steps_taken = k + 1;
        detail::append_baseline_record(traj, x, obj.probe(x), 0);
    }
    return traj;
}

LyapunovProbe lyapunov_decrease(const Trajectory& traj, const Objective& base,
                                std::span<const double> x_star, std::size_t window) {
    LyapunovProbe probe;
    probe.band = limit_band(traj, window, x_star);
    const std::size_t sweep = 4 * x_star.size();
    for (std::size_t k = 0; k + sweep < traj.size(); k += sweep) {
        if (distance(traj.x[k], x_star) <= probe.band) continue;
        ++probe.boundaries_checked;
        if (base.probe(traj.x[k + sweep]) - base.probe(traj.x[k]) >= 0.0)
            ++probe.violations;
    }
    return probe;
}

namespace detail {

void seed_baseline_records(Trajectory& traj, const Vec& x0, double cost0) {
    traj.x.push_back(x0);
    traj.y.push_back(x0);
    traj.phase.push_back(-1);
    traj.coordinate.push_back(0);
    traj.cost.push_back(cost0);
    traj.evals.push_back(0);
}

void append_baseline_record(Trajectory& traj, const Vec& x, double cost,
                            std::uint64_t evals) {
    traj.x.push_back(x);
    traj.y.push_back(x);  // baselines carry no filter; mirror the iterates
    traj.phase.push_back(-1);
    traj.coordinate.push_back(0);
    traj.cost.push_back(cost);
    traj.evals.push_back(evals);
}

} // namespace detail

} // namespace ncmap::oracle

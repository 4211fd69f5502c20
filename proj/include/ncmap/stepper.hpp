#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ncmap/fields.hpp"
#include "ncmap/objective.hpp"
#include "ncmap/vec.hpp"

namespace ncmap {

enum class StepMethod { euler, heun };

constexpr std::string_view to_string(StepMethod m) {
    return m == StepMethod::euler ? "euler" : "heun";
}

StepMethod parse_step_method(std::string_view name);

/// Counted objective evaluations per micro-step.
constexpr std::uint64_t evals_per_step(StepMethod m) {
    return m == StepMethod::euler ? 1u : 2u;
}

namespace detail {

inline void check_step_args(const SwitchedField& sf, double h, std::size_t x_dim) {
    if (!(h > 0.0))
        throw std::invalid_argument("step: h must be positive");
    if (x_dim != sf.dimension())
        throw std::invalid_argument("step: point dimension mismatch");
}

} // namespace detail

/// One Euler micro-step in place: x += sqrt(h) * g_k(x). Returns the
/// objective value measured at the start point (the step's one query).
template <ObjectiveLike O>
double euler_step_inplace(const SwitchedField& sf, const O& obj, std::uint64_t k,
                          double h, Vec& x) {
    detail::check_step_args(sf, h, x.size());
    const double j = obj.value(x);
    const std::size_t c = sf.active_coordinate(k);
    x[c] += std::sqrt(h) * sf.apply_phase(SwitchedField::phase(k), j);
    return j;
}

/// One Heun (trapezoidal) micro-step in place:
///   c1 = g_k(x), c2 = g_k(x + sqrt(h) c1), x += sqrt(h)/2 (c1 + c2).
/// Two queries; returns the value measured at the start point.
template <ObjectiveLike O>
double heun_step_inplace(const SwitchedField& sf, const O& obj, std::uint64_t k,
                         double h, Vec& x) {
    detail::check_step_args(sf, h, x.size());
    const double s = std::sqrt(h);
    const int p = SwitchedField::phase(k);
    const std::size_t c = sf.active_coordinate(k);
    const double j0 = obj.value(x);
    const double c1 = sf.apply_phase(p, j0);
    const double saved = x[c];
    x[c] = saved + s * c1;  // predictor, same single active coordinate
    const double c2 = sf.apply_phase(p, obj.value(x));
    x[c] = saved + 0.5 * s * (c1 + c2);
    return j0;
}

template <ObjectiveLike O>
double micro_step_inplace(const SwitchedField& sf, StepMethod method, const O& obj,
                          std::uint64_t k, double h, Vec& x) {
    return method == StepMethod::euler ? euler_step_inplace(sf, obj, k, h, x)
                                       : heun_step_inplace(sf, obj, k, h, x);
}

template <ObjectiveLike O>
Vec euler_step(const SwitchedField& sf, const O& obj, std::uint64_t k, double h,
               std::span<const double> x) {
    Vec out(x.begin(), x.end());
    euler_step_inplace(sf, obj, k, h, out);
    return out;
}

template <ObjectiveLike O>
Vec heun_step(const SwitchedField& sf, const O& obj, std::uint64_t k, double h,
              std::span<const double> x) {
    Vec out(x.begin(), x.end());
    heun_step_inplace(sf, obj, k, h, out);
    return out;
}

/// One full coordinate sweep of 4n micro-steps starting at an aligned
/// index k0 (multiple of 4n). After such a sweep the composed map drifts
/// by h times the pair's macro-drift expression, up to O(h^{3/2}).
struct MacroStepRecord {
    Vec start;
    Vec end;
    std::vector<Vec> points;   // 4n+1 intermediates incl. endpoints, if recorded
    std::uint64_t evals_used = 0;
};

template <ObjectiveLike O>
MacroStepRecord macro_step(const SwitchedField& sf, StepMethod method, const O& obj,
                           double h, std::uint64_t k0, std::span<const double> x,
                           bool record_points = false) {
    detail::check_step_args(sf, h, x.size());
    const std::uint64_t sweep = 4 * static_cast<std::uint64_t>(sf.dimension());
    if (k0 % sweep != 0)
        throw std::invalid_argument("macro_step: k0 must be a multiple of 4n");

    MacroStepRecord rec;
    rec.start.assign(x.begin(), x.end());
    const std::uint64_t evals_before = obj.eval_count();

    Vec z = rec.start;
    if (record_points) {
        rec.points.reserve(sweep + 1);
        rec.points.push_back(z);
    }
    for (std::uint64_t k = k0; k < k0 + sweep; ++k) {
        micro_step_inplace(sf, method, obj, k, h, z);
        if (record_points) rec.points.push_back(z);
    }
    rec.end = std::move(z);
    rec.evals_used = obj.eval_count() - evals_before;
    return rec;
}

} // namespace ncmap

#include "ncmap/objective.hpp"

#include <stdexcept>

namespace ncmap {

Objective::Objective(std::size_t dimension, EvalFn eval, GradFn gradient, std::string label)
    : dim_(dimension), eval_(std::move(eval)), grad_(std::move(gradient)),
      label_(std::move(label)) {
    if (dim_ == 0) throw std::invalid_argument("Objective: dimension must be positive");
    if (!eval_) throw std::invalid_argument("Objective: eval function is empty");
}

void Objective::check_point(std::span<const double> x) const {
    if (x.size() != dim_)
        throw std::invalid_argument("Objective '" + label_ + "': point has dimension " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(dim_));
}

double Objective::value(std::span<const double> x) const {
    check_point(x);
    ++evals_;
    return eval_(x);
}

double Objective::probe(std::span<const double> x) const {
    check_point(x);
    return eval_(x);
}

Vec Objective::gradient(std::span<const double> x) const {
    check_point(x);
    if (!grad_)
        throw std::invalid_argument("Objective '" + label_ + "' has no analytic gradient");
    Vec g = grad_(x);
    if (g.size() != dim_)
        throw std::logic_error("Objective '" + label_ + "': gradient dimension mismatch");
    return g;
}

Objective make_quadratic(Vec center, double offset, double curvature) {
    if (center.empty())
        throw std::invalid_argument("make_quadratic: center vector is empty");
    const std::size_t n = center.size();
    auto eval = [center, offset, curvature](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t i = 0; i < center.size(); ++i) {
            const double d = x[i] - center[i];
            s += d * d;
        }
        return curvature * s + offset;
    };
    auto grad = [center, curvature](std::span<const double> x) {
        Vec g(center.size());
        for (std::size_t i = 0; i < center.size(); ++i)
            g[i] = 2.0 * curvature * (x[i] - center[i]);
        return g;
    };
    Objective obj(n, std::move(eval), std::move(grad), "quadratic");
    obj.set_minimizer(std::move(center));
    return obj;
}

Objective make_double_well(std::size_t dimension) {
    auto eval = [](std::span<const double> x) {
        double s = 0.0;
        for (double xi : x) {
            const double w = xi * xi - 1.0;
            s += w * w;
        }
        return s;
    };
    auto grad = [](std::span<const double> x) {
        Vec g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            g[i] = 4.0 * x[i] * (x[i] * x[i] - 1.0);
        return g;
    };
    return Objective(dimension, std::move(eval), std::move(grad), "double_well");
}

Objective make_constant(std::size_t dimension, double value) {
    auto eval = [value](std::span<const double>) { return value; };
    auto grad = [](std::span<const double> x) { return Vec(x.size(), 0.0); };
    return Objective(dimension, std::move(eval), std::move(grad), "constant");
}

NoisyObjective::NoisyObjective(Objective base, double sigma, std::uint64_t seed)
    : base_(std::move(base)), sigma_(sigma), seed_(seed), noise_(seed) {
    if (sigma < 0.0)
        throw std::invalid_argument("NoisyObjective: sigma must be nonnegative");
}

double NoisyObjective::value(std::span<const double> x) const {
    const double j = base_.value(x);
    if (sigma_ == 0.0) return j;
    return j + sigma_ * noise_.next();
}

NoisyObjective with_noise(Objective base, double sigma, std::uint64_t seed) {
    return NoisyObjective(std::move(base), sigma, seed);
}

} // namespace ncmap

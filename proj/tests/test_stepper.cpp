#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ncmap/fields.hpp"
#include "ncmap/objective.hpp"
#include "ncmap/oracle.hpp"
#include "ncmap/stepper.hpp"

using namespace ncmap;

namespace {

const Objective& setup_1d() {
    static const Objective obj = make_quadratic({2.0}, 6.0);
    return obj;
}

} // namespace

TEST_SUITE("stepper") {

TEST_CASE("euler step on the 1-D setup") {
    const SwitchedField sf(pair_sincos(), 1);
    const Vec out = euler_step(sf, setup_1d(), 0, 0.25, Vec{0.5});
    // x + sqrt(h) sin(J(x)) with J(0.5) = 8.25
    CHECK(out[0] == doctest::Approx(0.5 + 0.5 * std::sin(8.25)).epsilon(1e-15));
}

TEST_CASE("heun step on the 1-D setup") {
    const SwitchedField sf(pair_sincos(), 1);
    const Vec out = heun_step(sf, setup_1d(), 0, 0.25, Vec{0.5});
    const double c1 = std::sin(8.25);
    const double mid = 0.5 + 0.5 * c1;
    const double c2 = std::sin(setup_1d().probe(Vec{mid}));
    CHECK(out[0] == doctest::Approx(0.5 + 0.25 * (c1 + c2)).epsilon(1e-15));
}

TEST_CASE("opposite-phase steps cancel on a constant objective") {
    const Objective obj = make_constant(1, 3.3);
    const SwitchedField sf(pair_sincos(), 1);
    const Vec x1 = euler_step(sf, obj, 0, 0.25, Vec{0.5});
    const Vec x2 = euler_step(sf, obj, 2, 0.25, x1);  // phase 2 = -f1
    CHECK(std::abs(x2[0] - 0.5) <= 1e-12);
}

TEST_CASE("zero field leaves the point unchanged") {
    // offset 0 at the center: J = 0, so sin(J) = 0 exactly at phase 0
    const Objective obj = make_quadratic({2.0}, 0.0);
    const SwitchedField sf(pair_sincos(), 1);
    const Vec out = euler_step(sf, obj, 0, 0.25, Vec{2.0});
    CHECK(out[0] == 2.0);
}

TEST_CASE("heun equals euler on a constant field") {
    const Objective obj = make_constant(1, 1.7);
    const SwitchedField sf(pair_sincos(), 1);
    for (std::uint64_t k = 0; k < 4; ++k) {
        const Vec e = euler_step(sf, obj, k, 0.09, Vec{0.4});
        const Vec h = heun_step(sf, obj, k, 0.09, Vec{0.4});
        CHECK(e[0] == h[0]);
    }
}

TEST_CASE("nonpositive h is rejected") {
    const SwitchedField sf(pair_sincos(), 1);
    CHECK_THROWS_AS(euler_step(sf, setup_1d(), 0, 0.0, Vec{0.5}), std::invalid_argument);
    CHECK_THROWS_AS(heun_step(sf, setup_1d(), 0, -0.1, Vec{0.5}), std::invalid_argument);
}

TEST_CASE("heun tracks the exact flow of xdot = J(x) at order 3/2 in h") {
    // Phase 0 with the simple pair integrates xdot = J(x); for the 1-D
    // setup the flow has the closed form
    //   x(t) = 2 + sqrt(6) tan(sqrt(6) t + atan((x0 - 2)/sqrt(6))).
    const SwitchedField sf(pair_simple(), 1);
    const double x0 = 0.5;
    const double r6 = std::sqrt(6.0);
    std::vector<std::pair<double, double>> points;
    for (int e = 2; e <= 9; ++e) {
        const double h = std::pow(2.0, -e);
        const double t = std::sqrt(h);
        const double exact = 2.0 + r6 * std::tan(r6 * t + std::atan((x0 - 2.0) / r6));
        const Vec stepped = heun_step(sf, setup_1d(), 0, h, Vec{x0});
        points.emplace_back(h, std::abs(stepped[0] - exact));
    }
    const oracle::LogLogFit fit = oracle::fit_loglog(points);
    CHECK(fit.slope >= 1.4);
}

TEST_CASE("macro step composes 4n micro steps and records intermediates") {
    const Objective obj = make_quadratic({2.0, 2.0}, 6.0);
    const SwitchedField sf(pair_sincos(), 2);
    const Vec x0{0.5, 1.0};
    const MacroStepRecord rec = macro_step(sf, StepMethod::euler, obj, 0.1, 0, x0, true);
    REQUIRE(rec.points.size() == 9);  // 4n + 1
    CHECK(rec.points.front() == rec.start);
    CHECK(rec.points.back() == rec.end);
    CHECK(rec.start == x0);
    CHECK(rec.evals_used == 8);

    // without recording, points stay empty
    const MacroStepRecord lean = macro_step(sf, StepMethod::euler, obj, 0.1, 8, x0);
    CHECK(lean.points.empty());
}

TEST_CASE("macro step rejects unaligned start indices") {
    const Objective obj = make_quadratic({2.0, 2.0}, 6.0);
    const SwitchedField sf(pair_sincos(), 2);
    CHECK_THROWS_AS(macro_step(sf, StepMethod::euler, obj, 0.1, 3, Vec{0.5, 1.0}),
                    std::invalid_argument);
    CHECK_NOTHROW(macro_step(sf, StepMethod::euler, obj, 0.1, 16, Vec{0.5, 1.0}));
}

TEST_CASE("eval-count contract: 4n per euler sweep, 8n per heun sweep") {
    for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{5}}) {
        const Objective obj = make_quadratic(Vec(n, 2.0), 6.0);
        const SwitchedField sf(pair_sincos(), n);
        Vec x(n, 0.5);
        auto rec = macro_step(sf, StepMethod::euler, obj, 0.01, 0, x);
        CHECK(rec.evals_used == 4 * n);
        rec = macro_step(sf, StepMethod::heun, obj, 0.01, 0, x);
        CHECK(rec.evals_used == 8 * n);
    }
}

TEST_CASE("euler sweep with the simple pair has an exactly known remainder") {
    // For a unit quadratic the sweep composition is exact:
    //   end - start = -h J'(x)(J(x)+1) - h^{3/2} (J(x)+1)^2
    // At x = 0.5: drift 27.75, remainder coefficient 9.25^2 = 85.5625.
    const SwitchedField sf(pair_simple(), 1);
    for (int e = 2; e <= 9; ++e) {
        const double h = std::pow(2.0, -e);
        const MacroStepRecord rec = macro_step(sf, StepMethod::euler, setup_1d(), h, 0, Vec{0.5});
        const double residual = std::abs(rec.end[0] - 0.5 - h * 27.75);
        CHECK(residual / std::pow(h, 1.5) == doctest::Approx(85.5625).epsilon(1e-9));
    }
}

TEST_CASE("heun sweep with the sincos pair drifts by -h grad J up to O(h^{3/2})") {
    // grad J(0.5) = -3; the residual-to-h^{3/2} ratio stays bounded
    // (measured bound ~6.41 on this setup).
    const SwitchedField sf(pair_sincos(), 1);
    for (int e = 2; e <= 13; ++e) {
        const double h = std::pow(2.0, -e);
        const MacroStepRecord rec = macro_step(sf, StepMethod::heun, setup_1d(), h, 0, Vec{0.5});
        const double residual = std::abs(rec.end[0] - 0.5 - h * 3.0);
        CHECK(residual <= 6.5 * std::pow(h, 1.5));
    }
}

TEST_CASE("constant objective: macro step returns to the start") {
    const Objective obj = make_constant(3, -2.0);
    for (const StepMethod method : {StepMethod::euler, StepMethod::heun}) {
        const SwitchedField sf(pair_sincos(), 3);
        const Vec x0{0.1, 0.2, 0.3};
        const MacroStepRecord rec = macro_step(sf, method, obj, 0.5, 0, x0);
        CHECK(distance(rec.end, x0) <= 1e-12);
    }
}

TEST_CASE("method names parse and print") {
    CHECK(parse_step_method("euler") == StepMethod::euler);
    CHECK(parse_step_method("heun") == StepMethod::heun);
    CHECK(to_string(StepMethod::heun) == "heun");
    CHECK_THROWS_AS(parse_step_method("rk4"), std::invalid_argument);
    CHECK(evals_per_step(StepMethod::euler) == 1);
    CHECK(evals_per_step(StepMethod::heun) == 2);
}

} // TEST_SUITE

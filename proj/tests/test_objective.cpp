#include <doctest.h>

#include <cmath>

#include "ncmap/objective.hpp"
#include "ncmap/oracle.hpp"
#include "ncmap/rng.hpp"

using namespace ncmap;

TEST_SUITE("objective") {

TEST_CASE("quadratic matches the 1-D study setup") {
    const Objective obj = make_quadratic({2.0}, 6.0);
    CHECK(obj.dimension() == 1);
    CHECK(obj.value(Vec{0.5}) == doctest::Approx(8.25).epsilon(1e-15));
    CHECK(obj.gradient(Vec{0.5})[0] == doctest::Approx(-3.0).epsilon(1e-15));

    const Objective obj2 = make_quadratic({2.0, 2.0}, 6.0);
    CHECK(obj2.value(Vec{2.0, 2.0}) == 6.0);  // minimum value at the center
    REQUIRE(obj2.minimizer().has_value());
    CHECK((*obj2.minimizer())[0] == 2.0);
}

TEST_CASE("empty center is rejected") {
    CHECK_THROWS_AS(make_quadratic({}, 6.0), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected") {
    const Objective obj = make_quadratic({2.0, 2.0}, 6.0);
    CHECK_THROWS_AS(obj.value(Vec{0.5}), std::invalid_argument);
    CHECK_THROWS_AS(obj.gradient(Vec{0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("value counts evaluations, probe does not") {
    const Objective obj = make_quadratic({2.0}, 6.0);
    CHECK(obj.eval_count() == 0);  // fresh objective
    obj.value(Vec{0.5});
    obj.value(Vec{1.5});
    CHECK(obj.eval_count() == 2);
    obj.probe(Vec{0.5});
    obj.gradient(Vec{0.5});
    CHECK(obj.eval_count() == 2);
}

TEST_CASE("central differences match every built-in analytic gradient") {
    const Objective objs[] = {
        make_quadratic({2.0}, 6.0),
        make_quadratic({2.0, 2.0}, 6.0),
        make_quadratic({1.0, -2.0, 0.5, 3.0}, -1.0, 0.7),
        make_double_well(1),
        make_double_well(3),
    };
    UniformStream points(42);
    for (const Objective& obj : objs) {
        for (int trial = 0; trial < 100; ++trial) {
            Vec x(obj.dimension());
            for (double& xi : x) xi = points.next(-2.0, 4.0);
            const Vec fd = oracle::fd_gradient(obj, x);
            const Vec an = obj.gradient(x);
            for (std::size_t i = 0; i < x.size(); ++i)
                CHECK(std::abs(fd[i] - an[i]) <= 1e-5 * (1.0 + std::abs(an[i])));
        }
    }
}

TEST_CASE("zero-sigma noise wrapper is bit-identical to its base") {
    const Objective base = make_quadratic({2.0}, 6.0);
    const NoisyObjective noisy = with_noise(make_quadratic({2.0}, 6.0), 0.0, 123);
    UniformStream points(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec x{points.next(-5.0, 5.0)};
        CHECK(noisy.value(x) == base.probe(x));
    }
    CHECK(noisy.value(Vec{0.5}) == 8.25);
}

TEST_CASE("negative sigma is rejected") {
    CHECK_THROWS_AS(with_noise(make_quadratic({2.0}, 6.0), -0.1, 1), std::invalid_argument);
}

TEST_CASE("noisy sample mean obeys the law of large numbers") {
    // 3 sigma / sqrt(N) with sigma = 0.2, N = 1e4.
    const NoisyObjective noisy = with_noise(make_quadratic({2.0}, 6.0), 0.2, 991);
    const Vec x{0.5};
    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) sum += noisy.value(x);
    CHECK(std::abs(sum / n - 8.25) <= 0.006);
    CHECK(noisy.eval_count() == static_cast<std::uint64_t>(n));
}

TEST_CASE("same seed reproduces the same sample path") {
    const NoisyObjective a = with_noise(make_quadratic({2.0}, 6.0), 0.2, 55);
    const NoisyObjective b = with_noise(make_quadratic({2.0}, 6.0), 0.2, 55);
    for (int i = 0; i < 100; ++i) {
        const Vec x{0.5 + 0.01 * i};
        CHECK(a.value(x) == b.value(x));
    }
}

TEST_CASE("noise stream is standard normal to sampling accuracy") {
    GaussianStream g(2024);
    double sum = 0.0, sumsq = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double z = g.next();
        sum += z;
        sumsq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(std::abs(sumsq / n - 1.0) < 0.02);
}

TEST_CASE("double well has two wells and no declared minimizer") {
    const Objective obj = make_double_well(1);
    CHECK(obj.value(Vec{1.0}) == 0.0);
    CHECK(obj.value(Vec{-1.0}) == 0.0);
    CHECK(obj.value(Vec{0.0}) == 1.0);
    CHECK_FALSE(obj.minimizer().has_value());
}

} // TEST_SUITE

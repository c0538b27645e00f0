#include <doctest.h>

#include "heatbox/spectrum.hpp"
#include "heatbox/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace heatbox;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(SpectralModel(HyperBox({1.0}), 0.0), domain_error);
    CHECK_THROWS_AS(SpectralModel(HyperBox({1.0}), 1.5), domain_error);
    CHECK_THROWS_AS(SpectralModel(HyperBox({1.0}), 0.5, -1.0), domain_error);
}

TEST_CASE("eigenvalue examples") {
    CHECK(eigenvalue(SpectralModel(HyperBox({kPi}), 1.0), {3}) ==
          doctest::Approx(9.0).epsilon(1e-14));
    CHECK(eigenvalue(SpectralModel(HyperBox({1.0}), 0.5), {1}) ==
          doctest::Approx(kPi * 0.75).epsilon(1e-14));
    // extended-precision evaluation of (pi 15/8)^{3/2} + (pi 7/16)^{3/2}
    CHECK(eigenvalue(SpectralModel(HyperBox({1.0, 2.0}), 0.75), {2, 1}) ==
          doctest::Approx(15.907758330032352).epsilon(1e-14));
    CHECK_THROWS_AS(
        eigenvalue(SpectralModel(HyperBox({1.0}), 0.5), {1, 1}),
        domain_error);
    CHECK_THROWS_AS(eigenvalue(SpectralModel(HyperBox({1.0}), 0.5), {0}),
                    domain_error);
}

TEST_CASE("eigenvalue monotone in each index") {
    for (double s : {0.3, 0.5, 0.75, 1.0}) {
        const SpectralModel model(HyperBox({1.0, 2.0, 0.7}), s);
        for (int axis = 0; axis < 3; ++axis) {
            MultiIndex idx{2, 3, 4};
            double prev = eigenvalue(model, idx);
            for (int step = 0; step < 5; ++step) {
                ++idx[axis];
                const double next = eigenvalue(model, idx);
                CHECK(next > prev);
                prev = next;
            }
        }
    }
}

TEST_CASE("eigenvalue unit constant rescales") {
    const SpectralModel base(HyperBox({1.0}), 0.75);
    const SpectralModel scaled(HyperBox({1.0}), 0.75, 2.5);
    CHECK(eigenvalue(scaled, {4}) ==
          doctest::Approx(eigenvalue(base, {4}) / 2.5).epsilon(1e-14));
}

TEST_CASE("enumerate_spectrum examples") {
    const auto classical =
        enumerate_spectrum(SpectralModel(HyperBox({kPi, kPi}), 1.0), 5.0);
    REQUIRE(classical.size() == 3);
    CHECK(classical[0].second == MultiIndex{1, 1});
    CHECK(classical[0].first == doctest::Approx(2.0));
    CHECK(classical[1].second == MultiIndex{1, 2});
    CHECK(classical[1].first == doctest::Approx(5.0));
    CHECK(classical[2].second == MultiIndex{2, 1});

    const auto linear =
        enumerate_spectrum(SpectralModel(HyperBox({1.0}), 0.5), 3.0 * kPi);
    REQUIRE(linear.size() == 3);
    for (int n = 1; n <= 3; ++n)
        CHECK(linear[n - 1].first ==
              doctest::Approx(kPi * (n - 0.25)).epsilon(1e-14));

    const auto ground =
        enumerate_spectrum(SpectralModel(HyperBox({1.0, 1.0}), 0.5), 2.0 * kPi);
    REQUIRE(ground.size() == 1);
    CHECK(ground[0].second == MultiIndex{1, 1});

    CHECK(enumerate_spectrum(SpectralModel(HyperBox({1.0}), 0.5), 1.0).empty());
}

TEST_CASE("enumerate_spectrum sorted, length = counting_function") {
    for (double s : {0.5, 0.75, 1.0}) {
        const SpectralModel model(HyperBox({1.0, 1.7}), s);
        const double e = 200.0;
        const auto spectrum = enumerate_spectrum(model, e);
        CHECK(static_cast<long long>(spectrum.size()) ==
              counting_function(model, e));
        for (std::size_t i = 1; i < spectrum.size(); ++i)
            CHECK(spectrum[i].first >= spectrum[i - 1].first);
    }
}

TEST_CASE("counting_function examples") {
    CHECK(counting_function(SpectralModel(HyperBox({kPi}), 1.0), 4.0) == 2);
    CHECK(counting_function(SpectralModel(HyperBox({1.0, 1.0}), 0.5),
                            50.0 * kPi) == 1225);
    CHECK(counting_function(SpectralModel(HyperBox({1.0}), 0.5), 0.5) == 0);
}

TEST_CASE("counting_function nondecreasing") {
    const SpectralModel model(HyperBox({1.0, 2.0}), 0.75);
    long long prev = 0;
    for (double e = 5.0; e <= 200.0; e *= 1.7) {
        const long long n = counting_function(model, e);
        CHECK(n >= prev);
        prev = n;
    }
}

TEST_CASE("weyl_prediction examples") {
    CHECK(weyl_prediction(SpectralModel(HyperBox({1.0, 1.0}), 0.5),
                          50.0 * kPi) == doctest::Approx(1250.0).epsilon(1e-12));
    CHECK(weyl_prediction(SpectralModel(HyperBox({kPi}), 1.0), 100.0) ==
          doctest::Approx(10.0).epsilon(1e-12));
    const double e = 77.7;
    CHECK(weyl_prediction(SpectralModel(HyperBox({1.0}), 0.5), e) ==
          doctest::Approx(e / kPi).epsilon(1e-12));
    // 1D linear spectrum: exact count floor(e/pi + 1/4)
    CHECK(counting_function(SpectralModel(HyperBox({1.0}), 0.5), e) ==
          (long long)std::floor(e / kPi + 0.25));
}

TEST_CASE("scale covariance") {
    const double c = 1.7;
    for (double s : {0.5, 0.75, 1.0}) {
        const SpectralModel base(HyperBox({1.0, 2.0}), s);
        std::vector<double> scaled_edges{c * 1.0, c * 2.0};
        const SpectralModel scaled(HyperBox(scaled_edges), s);
        const MultiIndex idx{3, 2};
        CHECK(eigenvalue(scaled, idx) ==
              doctest::Approx(eigenvalue(base, idx) / std::pow(c, 2.0 * s))
                  .epsilon(1e-13));
        const double e = 40.0;
        CHECK(counting_function(scaled, e) ==
              counting_function(base, std::pow(c, 2.0 * s) * e));
    }
}

TEST_CASE("counting ratio approaches Weyl prediction") {
    // e values chosen so the spectrum holds >= 1e4 eigenvalues and the
    // number-theoretic fluctuation does not spoil the e -> 4e comparison.
    struct Case { int d; double s; double e; };
    const Case cases[] = {
        {1, 0.5, 33333.0},   {1, 0.75, 7000000.1}, {1, 1.0, 987654321.1},
        {2, 0.5, 700.1},     {2, 0.75, 7500.3},    {2, 1.0, 130000.3},
        {3, 0.5, 200.5},     {3, 0.75, 1000.3},    {3, 1.0, 10000.7},
    };
    for (const Case& c : cases) {
        CAPTURE(c.d);
        CAPTURE(c.s);
        const SpectralModel model(HyperBox(std::vector<double>(c.d, 1.0)), c.s);
        const double r1 =
            double(counting_function(model, c.e)) / weyl_prediction(model, c.e);
        const double r4 = double(counting_function(model, 4.0 * c.e)) /
                          weyl_prediction(model, 4.0 * c.e);
        CHECK(r1 >= 0.9);
        CHECK(r1 <= 1.1);
        CHECK(std::abs(r4 - 1.0) < std::abs(r1 - 1.0));
    }
}

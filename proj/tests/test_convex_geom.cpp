#include <doctest.h>

#include "heatbox/convex_geom.hpp"
#include "heatbox/special_fn.hpp"
#include "heatbox/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace heatbox;

namespace {

constexpr double kPi = std::numbers::pi;

// Explicit parallel-body volume of a rectangle: rectangle + perimeter
// strip + full disc assembled from the four corner quarters.
double parallel_body_2d(double a1, double a2, double rho) {
    return a1 * a2 + 2.0 * (a1 + a2) * rho + kPi * rho * rho;
}

// Explicit parallel-body volume of a 3D box: box + two slabs per face
// pair + quarter-cylinders along the 12 edges + octant spheres at the
// 8 corners.
double parallel_body_3d(double a1, double a2, double a3, double rho) {
    const double faces = 2.0 * (a1 * a2 + a1 * a3 + a2 * a3) * rho;
    const double edges = kPi * rho * rho * (a1 + a2 + a3);
    const double corners = 4.0 * kPi * rho * rho * rho / 3.0;
    return a1 * a2 * a3 + faces + edges + corners;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

} // namespace

TEST_CASE("HyperBox validation") {
    CHECK_THROWS_AS(HyperBox({}), domain_error);
    CHECK_THROWS_AS(HyperBox({1.0, -2.0}), domain_error);
    CHECK_THROWS_AS(HyperBox({0.0}), domain_error);
}

TEST_CASE("intrinsic volumes of boxes") {
    const std::vector<double> v123 = intrinsic_volumes(HyperBox({1, 2, 3}));
    CHECK(v123 == std::vector<double>{1, 6, 11, 6});
    const std::vector<double> v34 = intrinsic_volumes(HyperBox({3, 4}));
    CHECK(v34 == std::vector<double>{1, 7, 12});
    const std::vector<double> v1 = intrinsic_volumes(HyperBox({2.5}));
    CHECK(v1 == std::vector<double>{1, 2.5});
}

TEST_CASE("intrinsic volume scaling") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.3, 4.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int d = 1 + int(rng() % 5);
        std::vector<double> edges(d);
        for (double& a : edges) a = uni(rng);
        const double c = uni(rng);
        std::vector<double> scaled = edges;
        for (double& a : scaled) a *= c;
        const auto v = intrinsic_volumes(HyperBox(edges));
        const auto vs = intrinsic_volumes(HyperBox(scaled));
        for (int m = 0; m <= d; ++m)
            CHECK(vs[m] ==
                  doctest::Approx(std::pow(c, m) * v[m]).epsilon(1e-12));
    }
}

TEST_CASE("quermassintegrals") {
    const HyperBox box({1, 2, 3});
    const auto w = quermassintegrals(box);
    const auto v = intrinsic_volumes(box);
    CHECK(w[2] == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(w[0] == doctest::Approx(v[3]).epsilon(1e-14));
    // W_{d-1} = (1/d) omega_{d-1} sum a_i
    CHECK(w[2] == doctest::Approx((1.0 / 3.0) * ball_volume(2) * 6.0)
                      .epsilon(1e-14));

    const auto w2 = quermassintegrals(HyperBox({3, 4}));
    CHECK(w2[2] == doctest::Approx(kPi).epsilon(1e-14));

    // C(d,m) W_m = omega_m V_{d-m} exactly
    for (int m = 0; m <= 3; ++m)
        CHECK(binomial(3, m) * w[m] ==
              doctest::Approx(ball_volume(m) * v[3 - m]).epsilon(1e-14));
}

TEST_CASE("steiner_volume examples") {
    const HyperBox box3({1, 2, 3});
    CHECK(steiner_volume(box3, 1.0) ==
          doctest::Approx(parallel_body_3d(1, 2, 3, 1.0)).epsilon(1e-13));
    CHECK(steiner_volume(box3, 0.0) == doctest::Approx(6.0).epsilon(1e-15));
    const HyperBox box2({3, 4});
    CHECK(steiner_volume(box2, 2.0) ==
          doctest::Approx(40.0 + 4.0 * kPi).epsilon(1e-13));
    CHECK_THROWS_AS(steiner_volume(box2, -0.1), domain_error);
}

TEST_CASE("steiner_volume equals geometric decomposition, d in {2,3}") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> edge(0.2, 5.0);
    std::uniform_real_distribution<double> radius(0.0, 2.0);
    for (int rep = 0; rep < 40; ++rep) {
        const double rho = radius(rng);
        const double a1 = edge(rng), a2 = edge(rng), a3 = edge(rng);
        const double s2 = steiner_volume(HyperBox({a1, a2}), rho);
        CHECK(std::abs(s2 - parallel_body_2d(a1, a2, rho)) <= 1e-12 * s2);
        const double s3 = steiner_volume(HyperBox({a1, a2, a3}), rho);
        CHECK(std::abs(s3 - parallel_body_3d(a1, a2, a3, rho)) <= 1e-12 * s3);
    }
}

TEST_CASE("steiner V-form equals W-form") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> edge(0.2, 5.0);
    std::uniform_real_distribution<double> radius(0.0, 2.0);
    for (int rep = 0; rep < 40; ++rep) {
        const int d = 1 + int(rng() % 6);
        std::vector<double> edges(d);
        for (double& a : edges) a = edge(rng);
        const HyperBox box(edges);
        const double rho = radius(rng);
        const auto w = quermassintegrals(box);
        double w_form = 0.0;
        for (int m = 0; m <= d; ++m)
            w_form += binomial(d, m) * w[m] * std::pow(rho, m);
        const double v_form = steiner_volume(box, rho);
        CHECK(std::abs(v_form - w_form) <= 1e-13 * std::abs(v_form));
    }
}

TEST_CASE("mean_breadth") {
    CHECK(mean_breadth(HyperBox({1, 2, 3})) ==
          doctest::Approx(3.0).epsilon(1e-13));
    CHECK(mean_breadth(HyperBox({2, 2, 2})) ==
          doctest::Approx(3.0).epsilon(1e-13));
    CHECK(mean_breadth(HyperBox({1.7})) ==
          doctest::Approx(1.7).epsilon(1e-14));
    // d = 3 classical mean width (a1+a2+a3)/2
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> edge(0.2, 5.0);
    for (int rep = 0; rep < 20; ++rep) {
        const double a1 = edge(rng), a2 = edge(rng), a3 = edge(rng);
        const double b = mean_breadth(HyperBox({a1, a2, a3}));
        CHECK(std::abs(b - 0.5 * (a1 + a2 + a3)) <= 1e-13 * b);
    }
}

TEST_CASE("geometry_report invariants") {
    const GeometryReport r = geometry_report(HyperBox({1, 2, 3}));
    CHECK(r.intrinsic_volumes[0] == 1.0);
    CHECK(r.volume == doctest::Approx(6.0));
    CHECK(r.quermassintegrals[0] == doctest::Approx(r.volume));
    for (double x : r.intrinsic_volumes) CHECK(x > 0.0);
    for (double x : r.quermassintegrals) CHECK(x > 0.0);
}

TEST_CASE("corner_correction") {
    const double right = kPi / 2.0;
    CHECK(corner_correction(CornerSpec({right, right, right, right})) ==
          doctest::Approx(0.25).epsilon(1e-15));
    CHECK(corner_correction(CornerSpec({kPi})) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(CornerSpec({0.0}), domain_error);
    CHECK_THROWS_AS(CornerSpec({2.0 * kPi}), domain_error);
}

TEST_CASE("regular polygon correction") {
    CHECK(regular_polygon_correction(4) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(regular_polygon_correction(3) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(std::abs(regular_polygon_correction(1000000) - 1.0 / 6.0) <= 1e-5);
    for (long long n = 3; n < 50; ++n)
        CHECK(regular_polygon_correction(n) > regular_polygon_correction(n + 1));
    CHECK_THROWS_AS(regular_polygon_correction(2), domain_error);
}

TEST_CASE("corner_correction matches regular polygon formula") {
    for (int n = 3; n <= 100; ++n) {
        const double phi = kPi * double(n - 2) / double(n);
        const CornerSpec spec(std::vector<double>(n, phi));
        CHECK(std::abs(corner_correction(spec) -
                       regular_polygon_correction(n)) <= 1e-13);
    }
}

#include "heatbox/convex_geom.hpp"
#include "heatbox/special_fn.hpp"
#include "heatbox/errors.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace heatbox {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

} // namespace

HyperBox::HyperBox(std::vector<double> e) : edges(std::move(e)) {
    if (edges.empty())
        throw domain_error("HyperBox: dimension must be >= 1");
    for (double a : edges)
        if (!(a > 0.0) || !std::isfinite(a))
            throw domain_error("HyperBox: edges must be positive and finite");
}

CornerSpec::CornerSpec(std::vector<double> a) : angles(std::move(a)) {
    for (double phi : angles)
        if (!(phi > 0.0) || !(phi < 2.0 * std::numbers::pi))
            throw domain_error("CornerSpec: angles must lie in (0, 2pi)");
}

std::vector<double> intrinsic_volumes(const HyperBox& box) {
    return elementary_symmetric_all(box.edges);
}

std::vector<double> quermassintegrals(const HyperBox& box) {
    const int d = box.dim();
    const std::vector<double> v = intrinsic_volumes(box);
    std::vector<double> w(d + 1);
    for (int m = 0; m <= d; ++m)
        w[m] = ball_volume(m) * v[d - m] / binomial(d, m);
    return w;
}

double steiner_volume(const HyperBox& box, double rho) {
    if (!(rho >= 0.0))
        throw domain_error("steiner_volume: rho must be nonnegative");
    const int d = box.dim();
    const std::vector<double> v = intrinsic_volumes(box);
    double acc = 0.0;
    for (int j = 0; j <= d; ++j)
        acc += ball_volume(d - j) * v[j] * std::pow(rho, double(d - j));
    return acc;
}

double mean_breadth(const HyperBox& box) {
    const int d = box.dim();
    const double v1 = elementary_symmetric(box.edges, 1);
    return (2.0 / d) * (ball_volume(d - 1) / ball_volume(d)) * v1;
}

GeometryReport geometry_report(const HyperBox& box) {
    GeometryReport r;
    r.intrinsic_volumes = intrinsic_volumes(box);
    r.quermassintegrals = quermassintegrals(box);
    r.mean_breadth = mean_breadth(box);
    r.volume = r.intrinsic_volumes.back();
    return r;
}

double corner_correction(const CornerSpec& corners) {
    const double pi = std::numbers::pi;
    double acc = 0.0;
    for (double phi : corners.angles)
        acc += (pi * pi - phi * phi) / (24.0 * pi * phi);
    return acc;
}

double regular_polygon_correction(long long n) {
    if (n < 3)
        throw domain_error("regular_polygon_correction: need n >= 3");
    return (1.0 / 6.0) * double(n - 1) / double(n - 2);
}

} // namespace heatbox

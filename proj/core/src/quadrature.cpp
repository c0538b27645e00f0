#include "heatbox/quadrature.hpp"
#include "heatbox/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace heatbox {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01,
};
constexpr double kKronrodWeights[8] = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02,
};
constexpr double kGaussWeights[4] = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01,
};

} // namespace

QuadratureResult gk15_panel(const std::function<double(double)>& f,
                            double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double f0 = f(c);
    double kronrod = kKronrodWeights[0] * f0;
    double gauss = kGaussWeights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kKronrodNodes[i];
        const double fsum = f(c - dx) + f(c + dx);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 0) gauss += kGaussWeights[i / 2] * fsum;
    }
    QuadratureResult r;
    r.value = kronrod * h;
    const double diff = (kronrod - gauss) * h;
    r.error_estimate = std::pow(200.0 * std::abs(diff), 1.5);
    if (!std::isfinite(r.error_estimate) || r.error_estimate > std::abs(diff))
        r.error_estimate = std::abs(diff);
    return r;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    const QuadratureSpec& spec) {
    struct Panel {
        double lo, hi, value, error;
        bool operator<(const Panel& other) const { return error < other.error; }
    };

    auto make_panel = [&](double a, double b) {
        QuadratureResult r = gk15_panel(f, a, b);
        return Panel{a, b, r.value, r.error_estimate};
    };

    std::priority_queue<Panel> panels;
    panels.push(make_panel(lo, hi));
    double total = panels.top().value;
    double total_error = panels.top().error;
    int used = 1;

    auto tolerance = [&] {
        return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    };

    while (total_error > tolerance()) {
        if (used >= spec.max_subdivisions)
            throw numerical_error(
                "integrate_adaptive: subdivision budget exhausted",
                total_error);
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = make_panel(worst.lo, mid);
        Panel right = make_panel(mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++used;
    }
    return {total, total_error};
}

} // namespace heatbox

#ifndef HEATBOX_QUADRATURE_HPP
#define HEATBOX_QUADRATURE_HPP

#include <functional>

namespace heatbox {

/// Numerical control knobs for the adaptive integrator.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 10000;
    double cutoff_epsilon = 1e-16; // sets the upper integration limit rule
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod 7/15 on a finite interval. Throws
/// numerical_error when the subdivision budget is exhausted before the
/// tolerance is met.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    const QuadratureSpec& spec);

/// Single non-adaptive GK15 panel (value + error estimate).
QuadratureResult gk15_panel(const std::function<double(double)>& f,
                            double lo, double hi);

} // namespace heatbox

#endif

#ifndef HEATBOX_TRACE_HPP
#define HEATBOX_TRACE_HPP

#include "heatbox/spectrum.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace heatbox {

/// Truncation control for infinite spectral sums.
struct TruncationSpec {
    double tail_epsilon = 1e-14;
    long long max_terms_per_axis = 10'000'000;
};

/// Scale factor of the small-t expansion:
/// lambda(t) = Gamma(1 + 1/(2s)) / (pi t^{1/(2s)}).
double expansion_scale(double s, double t);

// ---------------------------------------------------------------------------
// Euler-Maclaurin engine
// ---------------------------------------------------------------------------

/// A summand f together with its derivatives and antiderivative, as the
/// Euler-Maclaurin formula needs them. `integral(lo, hi)` must return
/// the exact (or externally computed) value of the integral of f;
/// hi may be +infinity. `derivative(u, l)` is the l-th derivative, l >= 1.
struct EmFunction {
    std::function<double(double)> value;
    std::function<double(double, int)> derivative;
    std::function<double(double, double)> integral;
    int max_derivative_order = 30;
};

struct EmResult {
    double value = 0.0;
    double remainder_bound = 0.0; // upper bound on |true sum - value|
};

/// Euler-Maclaurin evaluation of sum_{k=n+1}^{m} f(k) for decreasing f:
///   integral_n^m f  +  sum_{l=1}^{p} (-1)^l B_l/l! [f^{(l-1)}(m) - f^{(l-1)}(n)]
/// plus a bound on the Bernoulli-kernel remainder integral.
/// m may be +infinity, in which case boundary terms at m are taken as 0.
EmResult em_sum(const EmFunction& f, double n, double m, int p);

// ---------------------------------------------------------------------------
// Trace routes
// ---------------------------------------------------------------------------

/// One-axis partition function Z_j(t,s) = sum_{n>=1} exp(-t E_n) with the
/// tail certified against the monotone integral bound.
double trace_1d_direct(double a, double s, double t,
                       const TruncationSpec& trunc = {});

/// Full trace as the product of per-axis factors.
double trace_direct(const SpectralModel& model, double t,
                    const TruncationSpec& trunc = {});

/// Exact s = 1/2 closed form: the spectrum is arithmetic, so the sum is
/// the geometric series exp(-3 pi t / 4a) / (1 - exp(-pi t / a)).
double trace_exact_half(double a, double t);

/// Exact s = 1 form via theta functions: prod_j (Theta(pi t / a_j^2) - 1) / 2.
double trace_theta_s1(const HyperBox& box, double t);

/// One term of the small-t expansion: c_m = (-s/2)^{d-m} V_m, together with
/// its provenance and the quermassintegral-route value of V_m.
struct AsymptoticCoefficient {
    double value = 0.0;            // c_m
    double intrinsic_volume = 0.0; // V_m
    double prefactor = 0.0;        // (-s/2)^{d-m}
    double w_form_volume = 0.0;    // V_m recovered from W_{d-m}
};

/// Coefficients of the small-t trace expansion Z ~ sum_m c_m lambda(t)^m.
struct AsymptoticExpansion {
    double s = 1.0;
    std::vector<AsymptoticCoefficient> coefficients; // index m = 0..d
};

AsymptoticExpansion expansion_coefficients(const SpectralModel& model);

double trace_asymptotic(const SpectralModel& model, double t);

// ---------------------------------------------------------------------------
// Constant-term verification
// ---------------------------------------------------------------------------

struct EmConstantReport {
    double a = 0.0;
    double s = 0.0;
    // (t, trace_1d_direct - lambda(t) a) pairs, in the given t order.
    std::vector<std::pair<double, double>> constants;
    double limit_estimate = 0.0;
    double expected_constant = 0.0; // -s/2
    // Set for s < 1/2, where the expansion's validity is not established
    // (the summand is only continuous there).
    bool extrapolated_beyond_validity = false;
};

EmConstantReport verify_em_constant(double a, double s,
                                    const std::vector<double>& t_sequence,
                                    const TruncationSpec& trunc = {});

// ---------------------------------------------------------------------------
// Sampled curves (the comparison currency of the CLI and tests)
// ---------------------------------------------------------------------------

enum class TraceRoute { direct, exact_half, theta_s1, asymptotic, images };

std::string to_string(TraceRoute route);

struct TraceCurve {
    std::vector<std::pair<double, double>> samples; // (t, Z), t increasing
    TraceRoute route_label = TraceRoute::direct;
};

} // namespace heatbox

#endif

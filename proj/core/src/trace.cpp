#include "heatbox/trace.hpp"
#include "heatbox/quadrature.hpp"
#include "heatbox/special_fn.hpp"
#include "heatbox/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace heatbox {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Integral bound on the tail sum_{n > n0} exp(-t (pi (n - c)/a)^{2s}),
// via monotone comparison with the integral from n0.
double direct_tail_bound(double a, double s, double t, long long n0) {
    const double c = 0.5 * (1.0 - s);
    // Substitute v = pi (u - c)/a; the decay length in v past v0 never
    // exceeds max(1/(t 2s v0^{2s-1}), width to double the exponent).
    const double v0 = kPi * (double(n0) - c) / a;
    const double e0 = t * std::pow(v0, 2.0 * s);
    if (e0 > 700.0) return 0.0;
    QuadratureSpec spec;
    spec.rel_tol = 1e-3;
    spec.abs_tol = 1e-300;
    spec.max_subdivisions = 2000;
    // Upper limit where the integrand underflows.
    const double v1 = std::pow(745.0 / t, 0.5 / s);
    if (v1 <= v0) return 0.0;
    auto integrand = [&](double v) { return std::exp(-t * std::pow(v, 2.0 * s)); };
    const double integral =
        integrate_adaptive(integrand, v0, v1, spec).value;
    return (a / kPi) * integral * 1.01;
}

} // namespace

double expansion_scale(double s, double t) {
    return gamma_fn(1.0 + 0.5 / s) / (kPi * std::pow(t, 0.5 / s));
}

std::string to_string(TraceRoute route) {
    switch (route) {
        case TraceRoute::direct: return "direct";
        case TraceRoute::exact_half: return "exact_half";
        case TraceRoute::theta_s1: return "theta_s1";
        case TraceRoute::asymptotic: return "asymptotic";
        case TraceRoute::images: return "images";
    }
    return "unknown";
}

EmResult em_sum(const EmFunction& f, double n, double m, int p) {
    if (p < 1) throw domain_error("em_sum: need p >= 1");
    if (p > f.max_derivative_order || !f.derivative)
        throw domain_error("em_sum: derivatives up to order p not available");
    if (!f.value || !f.integral)
        throw domain_error("em_sum: value and integral callbacks required");
    const bool infinite = std::isinf(m);

    const auto& bern = bernoulli_table(p).numbers;
    double factorial = 1.0;
    double boundary = 0.0;
    for (int l = 1; l <= p; ++l) {
        factorial *= l;
        if (bern[l] == 0.0) continue;
        const double at_n = (l == 1) ? f.value(n) : f.derivative(n, l - 1);
        const double at_m =
            infinite ? 0.0 : ((l == 1) ? f.value(m) : f.derivative(m, l - 1));
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        boundary += sign * bern[l] / factorial * (at_m - at_n);
    }

    EmResult result;
    result.value = f.integral(n, m) + boundary;

    // Remainder bound: (1/p!) int |B_p(u - [u])| |f^(p)(u)| du, integrated
    // unit interval by unit interval so the Bernoulli kernel stays smooth.
    double p_factorial = 1.0;
    for (int l = 2; l <= p; ++l) p_factorial *= l;
    auto kernel = [&](double u) {
        const double frac = u - std::floor(u);
        return std::abs(bernoulli_poly(p, frac)) * std::abs(f.derivative(u, p));
    };
    double remainder = 0.0;
    const double scale_probe = std::abs(f.derivative(n + 0.5, p));
    const long long max_units = 200000;
    long long k = 0;
    for (double lo = n; ; lo += 1.0, ++k) {
        if (!infinite && lo >= m) break;
        const double hi = infinite ? lo + 1.0 : std::min(lo + 1.0, m);
        const double piece = gk15_panel(kernel, lo, hi).value;
        remainder += piece;
        if (infinite &&
            (piece < 1e-18 * (1.0 + scale_probe) || k > max_units))
            break;
    }
    result.remainder_bound = remainder / p_factorial;
    return result;
}

double trace_1d_direct(double a, double s, double t,
                       const TruncationSpec& trunc) {
    if (!(a > 0.0)) throw domain_error("trace_1d_direct: edge must be positive");
    if (!(s > 0.0) || !(s <= 1.0))
        throw domain_error("trace_1d_direct: s must lie in (0, 1]");
    if (!(t > 0.0)) throw domain_error("trace_1d_direct: t must be positive");

    const double c = 0.5 * (1.0 - s);
    const double log_inv_eps = std::log(1.0 / trunc.tail_epsilon);
    const long long n_planned =
        static_cast<long long>(
            std::ceil((a / kPi) * std::pow(log_inv_eps / t, 0.5 / s) + c)) +
        2;
    if (n_planned > trunc.max_terms_per_axis)
        throw resource_error(
            "trace_1d_direct: truncation needs " + std::to_string(n_planned) +
                " terms, more than max_terms_per_axis",
            n_planned);

    auto term = [&](long long n) {
        return std::exp(-t * std::pow(kPi * (double(n) - c) / a, 2.0 * s));
    };
    KahanSum sum;
    for (long long n = 1; n <= n_planned; ++n) sum.add(term(n));

    // Certify, and if the integral bound says the tail still matters,
    // keep extending in blocks.
    long long n_used = n_planned;
    while (direct_tail_bound(a, s, t, n_used) > trunc.tail_epsilon * sum.sum) {
        const long long extra = std::max<long long>(16, n_used / 8);
        if (n_used + extra > trunc.max_terms_per_axis)
            throw resource_error(
                "trace_1d_direct: tail certificate needs more than "
                "max_terms_per_axis terms",
                n_used + extra);
        for (long long n = n_used + 1; n <= n_used + extra; ++n)
            sum.add(term(n));
        n_used += extra;
    }
    return sum.sum;
}

double trace_direct(const SpectralModel& model, double t,
                    const TruncationSpec& trunc) {
    // Separability: exp(-t sum_i E_i / D) factorizes over axes with the
    // rescaled time t / D.
    const double t_eff = t / model.unit_constant;
    double product = 1.0;
    for (double a : model.box.edges)
        product *= trace_1d_direct(a, model.s, t_eff, trunc);
    return product;
}

double trace_exact_half(double a, double t) {
    if (!(a > 0.0) || !(t > 0.0))
        throw domain_error("trace_exact_half: need a > 0 and t > 0");
    const double x = kPi * t / a;
    return std::exp(-0.75 * x) / (-std::expm1(-x));
}

double trace_theta_s1(const HyperBox& box, double t) {
    if (!(t > 0.0)) throw domain_error("trace_theta_s1: t must be positive");
    double product = 1.0;
    for (double a : box.edges)
        product *= 0.5 * theta_minus_one(kPi * t / (a * a));
    return product;
}

AsymptoticExpansion expansion_coefficients(const SpectralModel& model) {
    const int d = model.box.dim();
    const std::vector<double> v = intrinsic_volumes(model.box);
    const std::vector<double> w = quermassintegrals(model.box);
    AsymptoticExpansion expansion;
    expansion.s = model.s;
    expansion.coefficients.resize(d + 1);
    for (int m = 0; m <= d; ++m) {
        AsymptoticCoefficient& c = expansion.coefficients[m];
        c.intrinsic_volume = v[m];
        c.prefactor = std::pow(-0.5 * model.s, double(d - m));
        c.value = c.prefactor * c.intrinsic_volume;
        // Quermassintegral route: V_m = (d-m)/O_{d-m-1} * C(d,d-m) * W_{d-m},
        // degenerating to W_0 at m = d.
        if (m == d)
            c.w_form_volume = w[0];
        else
            c.w_form_volume = double(d - m) / sphere_area(d - m) *
                              binomial(d, d - m) * w[d - m];
    }
    return expansion;
}

double trace_asymptotic(const SpectralModel& model, double t) {
    if (!(t > 0.0)) throw domain_error("trace_asymptotic: t must be positive");
    const AsymptoticExpansion expansion = expansion_coefficients(model);
    const double lambda =
        expansion_scale(model.s, t / model.unit_constant);
    double acc = 0.0;
    double power = 1.0;
    for (const AsymptoticCoefficient& c : expansion.coefficients) {
        acc += c.value * power;
        power *= lambda;
    }
    return acc;
}

EmConstantReport verify_em_constant(double a, double s,
                                    const std::vector<double>& t_sequence,
                                    const TruncationSpec& trunc) {
    EmConstantReport report;
    report.a = a;
    report.s = s;
    report.expected_constant = -0.5 * s;
    report.extrapolated_beyond_validity = s < 0.5;
    for (double t : t_sequence) {
        const double z = trace_1d_direct(a, s, t, trunc);
        report.constants.emplace_back(t, z - expansion_scale(s, t) * a);
    }
    if (!report.constants.empty())
        report.limit_estimate = report.constants.back().second;
    return report;
}

} // namespace heatbox

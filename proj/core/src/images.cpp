#include "heatbox/images.hpp"
#include "heatbox/special_fn.hpp"
#include "heatbox/errors.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace heatbox {

namespace {

constexpr double kPi = std::numbers::pi;

// Upper integration limit: beyond k_max the envelope exp(-t k^{2s}) is
// below cutoff_epsilon.
double wavenumber_cutoff(double s, double t, const QuadratureSpec& quad) {
    return std::pow(std::log(1.0 / quad.cutoff_epsilon) / t, 0.5 / s);
}

// Euler transformation of a (near-)alternating series tail: repeated
// averaging of the partial sums.
double euler_accelerated_sum(const std::vector<double>& terms) {
    const std::size_t n_direct = std::min<std::size_t>(8, terms.size() / 2);
    double head = 0.0;
    for (std::size_t i = 0; i < n_direct; ++i) head += terms[i];
    std::vector<double> partial;
    double acc = 0.0;
    for (std::size_t i = n_direct; i < terms.size(); ++i) {
        acc += terms[i];
        partial.push_back(acc);
    }
    if (partial.empty()) return head;
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return head + partial[0];
}

// int_0^infty envelope(k) cos(freq k) dk (weight_by_k false) or
// int_0^infty envelope(k) sin(freq k)/k dk (weight_by_k true), for a
// positive decreasing envelope. Integrates between consecutive zeros of
// the trigonometric factor and Euler-accelerates the alternating panel
// sums once the envelope tail is slow.
double oscillatory_integral(const std::function<double(double)>& envelope,
                            double freq, bool weight_by_k, double k_max) {
    const double half = kPi / freq;
    auto integrand = [&](double k) {
        if (weight_by_k)
            return k == 0.0 ? envelope(0.0) * freq
                            : envelope(k) * std::sin(freq * k) / k;
        return envelope(k) * std::cos(freq * k);
    };
    std::vector<double> terms;
    const std::size_t max_panels = 120;
    double lo = 0.0;
    double hi = weight_by_k ? half : 0.5 * half;
    bool covered = false;
    while (terms.size() < max_panels) {
        terms.push_back(gk15_panel(integrand, lo, hi).value);
        lo = hi;
        hi += half;
        if (lo > k_max) {
            covered = true;
            break;
        }
    }
    if (covered) {
        double acc = 0.0;
        for (std::size_t i = terms.size(); i-- > 0;) acc += terms[i];
        return acc;
    }
    return euler_accelerated_sum(terms);
}

// int_0^X p(w, t) dw, i.e. the kernel's cumulative mass from the origin.
double density_mass(double s, double t, double X, const QuadratureSpec& quad) {
    if (X == 0.0) return 0.0;
    const double k_max = wavenumber_cutoff(s, t, quad);
    auto envelope = [&](double k) { return std::exp(-t * std::pow(k, 2.0 * s)); };
    return oscillatory_integral(envelope, X, true, k_max) / kPi;
}

} // namespace

double free_density(double s, double t, double x, const QuadratureSpec& quad) {
    if (!(s > 0.0) || !(s <= 1.0))
        throw domain_error("free_density: s must lie in (0, 1]");
    if (!(t > 0.0)) throw domain_error("free_density: t must be positive");
    x = std::abs(x);
    const double k_max = wavenumber_cutoff(s, t, quad);
    auto envelope = [&](double k) { return std::exp(-t * std::pow(k, 2.0 * s)); };
    const double scaled = x * std::pow(t, -0.5 / s);
    if (scaled <= 2.0) {
        auto integrand = [&](double k) { return envelope(k) * std::cos(k * x); };
        return integrate_adaptive(integrand, 0.0, k_max, quad).value / kPi;
    }
    return oscillatory_integral(envelope, x, false, k_max) / kPi;
}

double image_density(double a, double s, double t, double x, double y,
                     const ImageSeriesSpec& spec, const QuadratureSpec& quad) {
    if (!(a > 0.0)) throw domain_error("image_density: edge must be positive");
    if (!(x >= 0.0) || !(x <= a) || !(y > 0.0) || !(y < a))
        throw domain_error("image_density: x, y must lie in the interval");
    // The kernel is invariant under reflecting both points through the
    // midpoint; mapping x into [0, a/2] makes the ring cancellation below
    // exact term by term at both endpoints.
    if (x > 0.5 * a) {
        x = a - x;
        y = a - y;
    }
    // Rings of images at |n| = 0, 1, ...; symmetric truncation keeps the
    // boundary cancellation at x = 0 exact term by term.
    double acc = 0.0;
    double ring_scale = 0.0;
    for (int n = 0; n <= spec.max_images; ++n) {
        double ring = 0.0;
        double ring_abs = 0.0;
        for (int sign_n : {+1, -1}) {
            if (n == 0 && sign_n < 0) continue;
            const double shift = 2.0 * double(sign_n * n) * a;
            const double direct = free_density(s, t, x - y - shift, quad);
            const double reflected = free_density(s, t, x + y - shift, quad);
            ring += direct - reflected;
            ring_abs += std::abs(direct) + std::abs(reflected);
        }
        acc += ring;
        ring_scale = std::max(ring_scale, ring_abs);
        if (n >= 2 && ring_abs < spec.series_tail_tol * ring_scale) break;
    }
    return acc;
}

double return_density(double a, double s, double t, double y,
                      const ImageSeriesSpec& spec, const QuadratureSpec& quad) {
    if (!(a > 0.0)) throw domain_error("return_density: edge must be positive");
    if (!(y > 0.0) || !(y < a))
        throw domain_error("return_density: y must lie in (0, a)");
    double acc = free_density(s, t, 0.0, quad);
    const double scale = acc;
    for (int n = 1; n <= spec.max_images; ++n) {
        const double pair = 2.0 * free_density(s, t, 2.0 * double(n) * a, quad);
        acc += pair;
        if (pair < spec.series_tail_tol * scale && n >= 2) break;
    }
    for (int n = 0; n <= spec.max_images; ++n) {
        double ring = free_density(s, t, 2.0 * (y - double(n) * a), quad);
        if (n > 0) ring += free_density(s, t, 2.0 * (y + double(n) * a), quad);
        acc -= ring;
        if (n >= 2 && ring < spec.series_tail_tol * scale) break;
    }
    return acc;
}

ImageTraceReport image_trace(double a, double s, double t,
                             const ImageSeriesSpec& spec,
                             const QuadratureSpec& quad) {
    if (!(a > 0.0)) throw domain_error("image_trace: edge must be positive");
    if (!(t > 0.0)) throw domain_error("image_trace: t must be positive");
    const int n_images = spec.max_images;

    ImageTraceReport report;

    // Free-return piece plus the analytic wavenumber-shift term
    // (a/pi) int_0^{pi g / a} exp(-t u^{2s}) du, g = (1-s)/2.
    const double g = 0.5 * (1.0 - s);
    double shift_term = 0.0;
    if (g > 0.0) {
        auto integrand = [&](double u) {
            return std::exp(-t * std::pow(u, 2.0 * s));
        };
        shift_term =
            (a / kPi) * integrate_adaptive(integrand, 0.0, kPi * g / a, quad).value;
    }
    report.bulk = a * free_density(s, t, 0.0, quad) + shift_term;

    // Image pairs: 2 a sum_{n>=1} p(2na, t).
    double pairs = 0.0;
    for (int n = 1; n <= n_images; ++n) {
        const double term =
            2.0 * a * free_density(s, t, 2.0 * double(n) * a, quad);
        pairs += term;
        if (n >= 2 && term < spec.series_tail_tol * report.bulk) break;
    }
    report.image_pairs = pairs;

    // Boundary piece: the reflected sum integrates, after exchanging the
    // finite image sum with the y-integral, to half the kernel mass over
    // the contiguous window the truncated images tile:
    //   sum_{|n|<=N} int_0^a p(2(y-na)) dy = (1/2) int_{-2Na}^{2(N+1)a} p.
    report.boundary =
        -0.5 * (density_mass(s, t, 2.0 * double(n_images) * a, quad) +
                density_mass(s, t, 2.0 * double(n_images + 1) * a, quad));

    report.value = report.bulk + report.image_pairs + report.boundary;
    return report;
}

double images_2d_gaussian_trace(const HyperBox& box, double t,
                                const ImageSeriesSpec& spec,
                                const QuadratureSpec& quad) {
    if (box.dim() != 2)
        throw domain_error("images_2d_gaussian_trace: box must be 2-dimensional");
    if (!(t > 0.0))
        throw domain_error("images_2d_gaussian_trace: t must be positive");
    const double a1 = box.edges[0], a2 = box.edges[1];

    // Classical Gaussian kernel (s = 1).
    auto gauss = [&](double x) {
        return std::exp(-x * x / (4.0 * t)) / std::sqrt(4.0 * kPi * t);
    };
    // Number of image rings needed: exp(-(2Na)^2/4t) below tail tolerance.
    auto rings = [&](double a) {
        const double need =
            std::sqrt(4.0 * t * std::log(1.0 / spec.series_tail_tol));
        return std::min(spec.max_images,
                        static_cast<int>(std::ceil(need / (2.0 * a))) + 1);
    };
    const int n1 = rings(a1), n2 = rings(a2);

    // Diagonal of the four-sign-class image sum at x = y. Each sign class
    // is a product over the two axes, so the double sum collapses into the
    // product of one-axis alternating sums; summing per axis first keeps
    // the near-total cancellation at large t out of the product.
    auto axis_sum = [&](double y, double a, int n_rings) {
        double acc = 0.0;
        for (int n = -n_rings; n <= n_rings; ++n)
            acc += gauss(2.0 * n * a) - gauss(2.0 * (y - n * a));
        return acc;
    };
    auto diagonal = [&](double y1, double y2) {
        return axis_sum(y1, a1, n1) * axis_sum(y2, a2, n2);
    };

    // The trace can be exponentially small at large t; do not let the
    // absolute floor override the relative target.
    QuadratureSpec outer = quad;
    outer.abs_tol = 0.0;
    QuadratureSpec inner = outer;
    inner.rel_tol = 0.1 * quad.rel_tol;
    auto row = [&](double y1) {
        return integrate_adaptive([&](double y2) { return diagonal(y1, y2); },
                                  0.0, a2, inner)
            .value;
    };
    return integrate_adaptive(row, 0.0, a1, outer).value;
}

} // namespace heatbox

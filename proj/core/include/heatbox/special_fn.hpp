#ifndef HEATBOX_SPECIAL_FN_HPP
#define HEATBOX_SPECIAL_FN_HPP

#include <span>
#include <vector>

namespace heatbox {

/// Gamma function on the positive real axis, Lanczos approximation.
/// Relative accuracy better than 1e-12 for x > 0.
double gamma_fn(double x);

/// Bernoulli numbers B_0 .. B_p (values B_l(0), with B_1 = -1/2).
struct BernoulliTable {
    std::vector<double> numbers;
    int max_order = 0;
};

/// Table of Bernoulli numbers up to order p, 0 <= p <= 30.
/// Computed by the exact integer-rational recurrence
///   sum_{k=0}^{l} C(l+1,k) B_k = 0,  B_0 = 1.
BernoulliTable bernoulli_table(int p);

/// Bernoulli polynomial B_l(u) for u in [0,1), 0 <= l <= 30.
double bernoulli_poly(int l, double u);

/// m-th elementary symmetric function of the given values; e_0 = 1.
double elementary_symmetric(std::span<const double> values, int m);

/// All elementary symmetric functions e_0 .. e_d in one pass.
std::vector<double> elementary_symmetric_all(std::span<const double> values);

/// Volume of the unit d-ball, omega_d = pi^{d/2} / Gamma(1 + d/2).
double ball_volume(int d);

/// Surface area of the unit (d-1)-sphere in R^d, O_{d-1} = 2 pi^{d/2} / Gamma(d/2).
double sphere_area(int d);

/// Theta function Theta(x) = sum_{n in Z} exp(-pi n^2 x), x > 0.
/// Arguments below 1 are routed through the modular identity
/// Theta(x) = Theta(1/x) / sqrt(x), so evaluation costs O(1) terms everywhere.
double theta(double x);

/// Theta(x) - 1, computed without cancellation for large x.
double theta_minus_one(double x);

} // namespace heatbox

#endif

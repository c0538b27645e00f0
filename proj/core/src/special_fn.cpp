#include "heatbox/special_fn.hpp"
#include "heatbox/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace heatbox {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr int kMaxBernoulliOrder = 30;

// Exact rational arithmetic for the Bernoulli recurrence. __int128 is
// ample: numerators stay below ~1e22 after reduction for p <= 30.
struct Rational {
    __int128 num = 0;
    __int128 den = 1;

    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
    }
};

Rational operator+(Rational lhs, Rational rhs) {
    Rational r{lhs.num * rhs.den + rhs.num * lhs.den, lhs.den * rhs.den};
    r.reduce();
    return r;
}

Rational operator*(Rational lhs, Rational rhs) {
    Rational r{lhs.num * rhs.num, lhs.den * rhs.den};
    r.reduce();
    return r;
}

std::vector<Rational> bernoulli_rationals(int p) {
    // Binomial triangle up to l+1 = p+1 rows.
    std::vector<std::vector<__int128>> binom(p + 2);
    for (int n = 0; n <= p + 1; ++n) {
        binom[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    std::vector<Rational> b(p + 1);
    b[0] = {1, 1};
    for (int l = 1; l <= p; ++l) {
        Rational acc{0, 1};
        for (int k = 0; k < l; ++k)
            acc = acc + Rational{binom[l + 1][k], 1} * b[k];
        acc = acc * Rational{-1, l + 1};
        b[l] = acc;
    }
    return b;
}

const BernoulliTable& full_bernoulli_table() {
    static const BernoulliTable table = [] {
        BernoulliTable t;
        t.max_order = kMaxBernoulliOrder;
        for (const Rational& r : bernoulli_rationals(kMaxBernoulliOrder))
            t.numbers.push_back(static_cast<double>(r.num) /
                                static_cast<double>(r.den));
        return t;
    }();
    return table;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("gamma_fn: argument must be positive and finite");
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x + kLanczosG - 0.5;
    return std::sqrt(2.0 * std::numbers::pi) *
           std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

BernoulliTable bernoulli_table(int p) {
    if (p < 0 || p > kMaxBernoulliOrder)
        throw domain_error("bernoulli_table: order must be in [0, 30]");
    const BernoulliTable& full = full_bernoulli_table();
    BernoulliTable t;
    t.max_order = p;
    t.numbers.assign(full.numbers.begin(), full.numbers.begin() + p + 1);
    return t;
}

double bernoulli_poly(int l, double u) {
    if (l < 0 || l > kMaxBernoulliOrder)
        throw domain_error("bernoulli_poly: order must be in [0, 30]");
    const auto& b = full_bernoulli_table().numbers;
    // B_l(u) = sum_k C(l,k) B_k u^{l-k}
    double acc = 0.0;
    for (int k = 0; k <= l; ++k)
        acc += binomial(l, k) * b[k] * std::pow(u, double(l - k));
    return acc;
}

double elementary_symmetric(std::span<const double> values, int m) {
    const int d = static_cast<int>(values.size());
    if (m < 0 || m > d)
        throw domain_error("elementary_symmetric: order out of range");
    return elementary_symmetric_all(values)[m];
}

std::vector<double> elementary_symmetric_all(std::span<const double> values) {
    std::vector<double> e(values.size() + 1, 0.0);
    e[0] = 1.0;
    std::size_t n = 0;
    for (double v : values) {
        ++n;
        for (std::size_t m = n; m >= 1; --m) e[m] += v * e[m - 1];
    }
    return e;
}

double ball_volume(int d) {
    if (d < 0) throw domain_error("ball_volume: dimension must be >= 0");
    return std::pow(std::numbers::pi, 0.5 * d) / gamma_fn(1.0 + 0.5 * d);
}

double sphere_area(int d) {
    if (d < 1) throw domain_error("sphere_area: dimension must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / gamma_fn(0.5 * d);
}

double theta(double x) {
    return 1.0 + theta_minus_one(x);
}

double theta_minus_one(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("theta: argument must be positive and finite");
    if (x < 1.0)
        return theta(1.0 / x) / std::sqrt(x) - 1.0;
    // exp(-36) < 1e-15 bounds the discarded tail
    const int n_max =
        static_cast<int>(std::ceil(std::sqrt(36.0 / (std::numbers::pi * x))));
    double tail = 0.0;
    for (int n = n_max; n >= 1; --n)
        tail += std::exp(-std::numbers::pi * double(n) * double(n) * x);
    return 2.0 * tail;
}

} // namespace heatbox

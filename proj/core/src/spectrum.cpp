#include "heatbox/spectrum.hpp"
#include "heatbox/special_fn.hpp"
#include "heatbox/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heatbox {

namespace {

// Single-axis term (pi (n - c) / a)^{2s}, c = (1-s)/2.
double axis_term(double a, double s, int n) {
    const double c = 0.5 * (1.0 - s);
    return std::pow(std::numbers::pi * (double(n) - c) / a, 2.0 * s);
}

// Upper bound on n such that the axis term alone can stay <= e_axis.
int axis_index_bound(double a, double s, double e_axis) {
    if (e_axis <= 0.0) return 0;
    const double c = 0.5 * (1.0 - s);
    return static_cast<int>(
               std::ceil((a / std::numbers::pi) * std::pow(e_axis, 0.5 / s) + c)) +
           1;
}

template <typename Visit>
void walk_spectrum(const SpectralModel& model, double e_budget, int axis,
                   double partial, MultiIndex& index, Visit&& visit) {
    const int d = model.box.dim();
    const double a = model.box.edges[axis];
    const int n_max = axis_index_bound(a, model.s, e_budget - partial);
    for (int n = 1; n <= n_max; ++n) {
        const double acc = partial + axis_term(a, model.s, n);
        if (acc > e_budget) break;
        index[axis] = n;
        if (axis + 1 == d)
            visit(acc, index);
        else
            walk_spectrum(model, e_budget, axis + 1, acc, index, visit);
    }
}

} // namespace

SpectralModel::SpectralModel(HyperBox b, double s_index, double unit)
    : box(std::move(b)), s(s_index), unit_constant(unit) {
    if (!(s > 0.0) || !(s <= 1.0))
        throw domain_error("SpectralModel: s must lie in (0, 1]");
    if (!(unit_constant > 0.0))
        throw domain_error("SpectralModel: unit constant must be positive");
}

double eigenvalue(const SpectralModel& model, const MultiIndex& index) {
    const int d = model.box.dim();
    if (static_cast<int>(index.size()) != d)
        throw domain_error("eigenvalue: index dimension mismatch");
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        if (index[i] < 1)
            throw domain_error("eigenvalue: index components must be >= 1");
        acc += axis_term(model.box.edges[i], model.s, index[i]);
    }
    return acc / model.unit_constant;
}

std::vector<std::pair<double, MultiIndex>>
enumerate_spectrum(const SpectralModel& model, double e_max) {
    std::vector<std::pair<double, MultiIndex>> out;
    MultiIndex index(model.box.dim());
    const double budget = e_max * model.unit_constant;
    walk_spectrum(model, budget, 0, 0.0, index,
                  [&](double e, const MultiIndex& idx) {
                      out.emplace_back(e / model.unit_constant, idx);
                  });
    std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.first != rhs.first) return lhs.first < rhs.first;
        return lhs.second < rhs.second;
    });
    return out;
}

long long counting_function(const SpectralModel& model, double e) {
    if (!(e > 0.0)) throw domain_error("counting_function: e must be positive");
    long long count = 0;
    MultiIndex index(model.box.dim());
    walk_spectrum(model, e * model.unit_constant, 0, 0.0, index,
                  [&](double, const MultiIndex&) { ++count; });
    return count;
}

double weyl_prediction(const SpectralModel& model, double e) {
    if (!(e > 0.0)) throw domain_error("weyl_prediction: e must be positive");
    const int d = model.box.dim();
    double volume = 1.0;
    for (double a : model.box.edges) volume *= a;
    const double s = model.s;
    const double coeff =
        volume *
        std::pow(2.0 * gamma_fn(1.0 + 0.5 / s) / (2.0 * std::numbers::pi), d);
    return coeff * std::pow(e * model.unit_constant, 0.5 * d / s) /
           gamma_fn(1.0 + 0.5 * d / s);
}

} // namespace heatbox

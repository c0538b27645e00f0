#ifndef HEATBOX_SPECTRUM_HPP
#define HEATBOX_SPECTRUM_HPP

#include "heatbox/convex_geom.hpp"

#include <utility>
#include <vector>

namespace heatbox {

/// Eigenvalue model of sum_i (-d^2/dx_i^2)^s on a box with Dirichlet
/// (absorbing) boundary: E_n = sum_i (pi (n_i - (1-s)/2) / a_i)^{2s} / D.
struct SpectralModel {
    HyperBox box;
    double s = 1.0;             // stability index, in (0, 1]
    double unit_constant = 1.0; // D_{2s}, sets the energy scale

    SpectralModel(HyperBox b, double s_index, double unit = 1.0);
};

using MultiIndex = std::vector<int>; // all components >= 1

double eigenvalue(const SpectralModel& model, const MultiIndex& index);

/// All (eigenvalue, index) pairs with eigenvalue <= e_max, sorted by
/// eigenvalue, ties broken lexicographically on the index.
std::vector<std::pair<double, MultiIndex>>
enumerate_spectrum(const SpectralModel& model, double e_max);

/// Number of eigenvalues <= e (with multiplicity).
long long counting_function(const SpectralModel& model, double e);

/// Weyl-law prediction for the counting function:
/// |Omega| (2 Gamma(1+1/(2s)))^d / (2 pi)^d * e^{d/(2s)} / Gamma(1+d/(2s)).
double weyl_prediction(const SpectralModel& model, double e);

} // namespace heatbox

#endif

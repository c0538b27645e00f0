#ifndef HEATBOX_CONVEX_GEOM_HPP
#define HEATBOX_CONVEX_GEOM_HPP

#include <vector>

namespace heatbox {

/// Axis-aligned hyperrectangular cavity with edge lengths a_1..a_d.
struct HyperBox {
    std::vector<double> edges;

    explicit HyperBox(std::vector<double> e);
    int dim() const { return static_cast<int>(edges.size()); }
};

/// Interior angles (radians) of a polygon's corners, each in (0, 2pi).
struct CornerSpec {
    std::vector<double> angles;

    explicit CornerSpec(std::vector<double> a);
};

struct GeometryReport {
    std::vector<double> intrinsic_volumes;  // V_0 .. V_d
    std::vector<double> quermassintegrals;  // W_0 .. W_d
    double mean_breadth = 0.0;
    double volume = 0.0;                    // V_d
};

/// Intrinsic volumes V_0..V_d of the box: V_m is the m-th elementary
/// symmetric function of the edges.
std::vector<double> intrinsic_volumes(const HyperBox& box);

/// Quermassintegrals W_0..W_d with W_m = omega_m V_{d-m} / C(d,m).
std::vector<double> quermassintegrals(const HyperBox& box);

/// Volume of the rho-parallel body: sum_j omega_{d-j} V_j rho^{d-j}.
double steiner_volume(const HyperBox& box, double rho);

/// Mean breadth (2/d)(omega_{d-1}/omega_d) V_1.
double mean_breadth(const HyperBox& box);

GeometryReport geometry_report(const HyperBox& box);

/// Constant heat-trace term contributed by polygon corners:
/// sum_i (pi^2 - phi_i^2) / (24 pi phi_i).
double corner_correction(const CornerSpec& corners);

/// Corner term of the regular n-gon, (1/6)(n-1)/(n-2), n >= 3.
double regular_polygon_correction(long long n);

} // namespace heatbox

#endif

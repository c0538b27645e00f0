#ifndef HEATBOX_IMAGES_HPP
#define HEATBOX_IMAGES_HPP

#include "heatbox/convex_geom.hpp"
#include "heatbox/quadrature.hpp"

namespace heatbox {

/// Truncation control for the alternating image series.
struct ImageSeriesSpec {
    int max_images = 64;
    double series_tail_tol = 1e-13;
};

/// Free-space transition density of the symmetric 2s-stable process,
/// p(x,t) = (1/pi) int_0^inf exp(-t k^{2s}) cos(k x) dk.
double free_density(double s, double t, double x,
                    const QuadratureSpec& quad = {});

/// Dirichlet kernel on (0,a) built from alternating reflected copies of
/// the free density:
/// sum_n p(|x - y - 2na|) - sum_n p(|x + y - 2na|).
double image_density(double a, double s, double t, double x, double y,
                     const ImageSeriesSpec& spec = {},
                     const QuadratureSpec& quad = {});

/// x -> y limit of the image kernel:
/// p(0) + 2 sum_{n>=1} p(2na) - sum_n p(2(y - na)).
double return_density(double a, double s, double t, double y,
                      const ImageSeriesSpec& spec = {},
                      const QuadratureSpec& quad = {});

/// Term-by-term decomposition of the image-route trace. `bulk` carries
/// the free-return contribution together with the analytic wavenumber
/// shift term, so it tends to lambda(t) a + (1-s)/2 as t -> 0; the image
/// pair term vanishes and the boundary term tends to -1/2.
struct ImageTraceReport {
    double value = 0.0;
    double bulk = 0.0;
    double image_pairs = 0.0;
    double boundary = 0.0;
};

ImageTraceReport image_trace(double a, double s, double t,
                             const ImageSeriesSpec& spec = {},
                             const QuadratureSpec& quad = {});

/// 2D method-of-images trace for the classical Laplacian (s = 1):
/// double integral over the rectangle of the diagonal of the
/// four-sign-class Gaussian image sum.
double images_2d_gaussian_trace(const HyperBox& box, double t,
                                const ImageSeriesSpec& spec = {},
                                const QuadratureSpec& quad = {});

} // namespace heatbox

#endif

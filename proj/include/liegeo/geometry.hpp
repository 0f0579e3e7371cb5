#pragma once

#include <cstdint>

#include "liegeo/algebra.hpp"

namespace liegeo {

/// Levi-Civita connection in the left-invariant frame:
/// gamma[i][j][k] is the k-th coordinate of nabla_{e_i} e_j.
struct ConnectionCoefficients {
    std::size_t n = 0;
    Tensor3 gamma;

    Vec apply_basis(std::size_t i, std::size_t j) const;
    // Bilinear extension to arbitrary vectors.
    Vec apply(const Vec& x, const Vec& y) const;
};

/// Curvature tensor: r[i][j][k][l] is the l-th coordinate of R(e_i,e_j)e_k.
struct CurvatureTensor {
    std::size_t n = 0;
    Tensor4 r;

    Vec apply_basis(std::size_t i, std::size_t j, std::size_t k) const;
    // Trilinear extension.
    Vec apply(const Vec& x, const Vec& y, const Vec& z) const;
};

// ad*_x y, the metric adjoint of ad_x: g(ad*_x y, z) = g(y, [x,z]) for all z.
Vec coadjoint(const MetricLieAlgebra& mla, const Vec& x, const Vec& y);

// Koszul formula for left-invariant metrics:
//   nabla_x y = (1/2)([x,y] - ad*_x y - ad*_y x).
ConnectionCoefficients levi_civita(const MetricLieAlgebra& mla);

// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z,
// evaluated on the frame (all covariant derivatives reduce to gamma products).
CurvatureTensor riemann(const MetricLieAlgebra& mla, const ConnectionCoefficients& conn);

// K(x,y) = g(R(x,y)y, x) / (g(x,x) g(y,y) - g(x,y)^2).
// Throws DegeneratePlaneError when the Gram determinant is below
// kDegeneracyEps relative to g(x,x) g(y,y).
double sectional(const MetricLieAlgebra& mla, const CurvatureTensor& curv, const Vec& x, const Vec& y);

// Ric(x,y) = sum_i g(R(u_i,x)y, u_i) over the gram_schmidt orthonormal basis.
double ricci(const MetricLieAlgebra& mla, const CurvatureTensor& curv, const Vec& x, const Vec& y);

// Ric(x,x); throws DegeneracyError on the zero vector.
double ricci_direction(const MetricLieAlgebra& mla, const CurvatureTensor& curv, const Vec& x);

struct SectionalScan {
    bool is_constant = false;
    double value = 0.0;          // mean over all sampled planes
    double max_deviation = 0.0;  // max |K - mean|
};

// Samples every distinct basis plane plus `trials` seeded random planes.
// Deterministic in (seed, trial index) regardless of evaluation order.
SectionalScan constant_sectional_check(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                                       int trials, std::uint64_t seed,
                                       double tol = kDefaultCompareTol);

}  // namespace liegeo

#include "liegeo/geometry.hpp"

#include <cmath>

#include "liegeo/rng.hpp"

namespace liegeo {

Vec ConnectionCoefficients::apply_basis(std::size_t i, std::size_t j) const {
    Vec r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = gamma(i, j, k);
    return r;
}

Vec ConnectionCoefficients::apply(const Vec& x, const Vec& y) const {
    Vec r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0.0) continue;
            const double xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) r[k] += xy * gamma(i, j, k);
        }
    }
    return r;
}

Vec CurvatureTensor::apply_basis(std::size_t i, std::size_t j, std::size_t k) const {
    Vec v(n);
    for (std::size_t l = 0; l < n; ++l) v[l] = r(i, j, k, l);
    return v;
}

Vec CurvatureTensor::apply(const Vec& x, const Vec& y, const Vec& z) const {
    Vec v(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0.0) continue;
            const double xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (z[k] == 0.0) continue;
                const double xyz = xy * z[k];
                for (std::size_t l = 0; l < n; ++l) v[l] += xyz * r(i, j, k, l);
            }
        }
    }
    return v;
}

Vec coadjoint(const MetricLieAlgebra& mla, const Vec& x, const Vec& y) {
    const std::size_t n = mla.dim();
    if (x.size() != n || y.size() != n) throw Error("coadjoint dimension mismatch");
    Vec rhs(n);
    for (std::size_t k = 0; k < n; ++k)
        rhs[k] = mla.inner(y, mla.structure().bracket(x, basis_vector(n, k)));
    return mla.metric().solve(rhs);
}

ConnectionCoefficients levi_civita(const MetricLieAlgebra& mla) {
    const std::size_t n = mla.dim();
    // ad*_{e_i} e_j for all basis pairs
    std::vector<Vec> adstar(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = basis_vector(n, i);
        for (std::size_t j = 0; j < n; ++j)
            adstar[i * n + j] = coadjoint(mla, ei, basis_vector(n, j));
    }

    ConnectionCoefficients conn{n, Tensor3(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = mla.structure().bracket_basis(i, j);
            axpy(v, -1.0, adstar[i * n + j]);
            axpy(v, -1.0, adstar[j * n + i]);
            for (std::size_t k = 0; k < n; ++k) conn.gamma(i, j, k) = 0.5 * v[k];
        }
    return conn;
}

CurvatureTensor riemann(const MetricLieAlgebra& mla, const ConnectionCoefficients& conn) {
    const std::size_t n = mla.dim();
    if (conn.n != n) throw Error("riemann dimension mismatch");
    const Tensor3& c = mla.structure().coefficients();
    const Tensor3& gm = conn.gamma;

    CurvatureTensor curv{n, Tensor4(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    double s = 0.0;
                    for (std::size_t m = 0; m < n; ++m)
                        s += gm(j, k, m) * gm(i, m, l) - gm(i, k, m) * gm(j, m, l) - c(i, j, m) * gm(m, k, l);
                    curv.r(i, j, k, l) = s;
                }
    return curv;
}

double sectional(const MetricLieAlgebra& mla, const CurvatureTensor& curv, const Vec& x, const Vec& y) {
    const double gxx = mla.inner(x, x);
    const double gyy = mla.inner(y, y);
    const double gxy = mla.inner(x, y);
    const double gram = gxx * gyy - gxy * gxy;
    if (gram < kDegeneracyEps * gxx * gyy || !(gram > 0.0))
        throw DegeneratePlaneError("sectional: x and y do not span a 2-plane");
    return mla.inner(curv.apply(x, y, y), x) / gram;
}

double ricci(const MetricLieAlgebra& mla, const CurvatureTensor& curv, const Vec& x, const Vec& y) {
    double s = 0.0;
    for (const Vec& u : gram_schmidt(mla)) s += mla.inner(curv.apply(u, x, y), u);
    return s;
}

double ricci_direction(const MetricLieAlgebra& mla, const CurvatureTensor& curv, const Vec& x) {
    if (max_abs(x) == 0.0) throw DegeneracyError("ricci_direction: zero direction");
    return ricci(mla, curv, x, x);
}

SectionalScan constant_sectional_check(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                                       int trials, std::uint64_t seed, double tol) {
    const std::size_t n = mla.dim();
    if (n < 2) throw Error("constant_sectional_check needs dimension >= 2");
    if (trials < 1) throw Error("constant_sectional_check needs trials >= 1");

    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            values.push_back(sectional(mla, curv, basis_vector(n, i), basis_vector(n, j)));

    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, "constant_sectional_check", static_cast<std::uint64_t>(t)));
        for (;;) {
            Vec x = random_vector(rng, n);
            Vec y = random_vector(rng, n);
            const double gxx = mla.inner(x, x), gyy = mla.inner(y, y), gxy = mla.inner(x, y);
            if (gxx * gyy - gxy * gxy < 1e-6 * gxx * gyy) continue;  // redraw near-degenerate planes
            values.push_back(sectional(mla, curv, x, y));
            break;
        }
    }

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double dev = 0.0;
    for (double v : values) dev = std::max(dev, std::abs(v - mean));

    return {dev <= tol, mean, dev};
}

}  // namespace liegeo

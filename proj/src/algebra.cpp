#include "liegeo/algebra.hpp"

#include <cmath>
#include <sstream>

namespace liegeo {

StructureConstants StructureConstants::zero(std::size_t n) {
    return StructureConstants(Tensor3(n));
}

StructureConstants StructureConstants::from_triplets(std::size_t n, const std::vector<Triplet>& triplets) {
    Tensor3 c(n);
    for (const Triplet& t : triplets) {
        if (t.i >= n || t.j >= n || t.k >= n)
            throw Error("structure constant index out of range");
        if (t.i == t.j) {
            if (t.value != 0.0) throw Error("nonzero structure constant on a repeated index pair");
            continue;
        }
        const std::size_t lo = std::min(t.i, t.j), hi = std::max(t.i, t.j);
        const double v = (t.i < t.j) ? t.value : -t.value;
        c(lo, hi, t.k) += v;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(j, i, k) = -c(i, j, k);
    return StructureConstants(std::move(c));
}

StructureConstants StructureConstants::from_dense(const Tensor3& c) {
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (c(i, j, k) != -c(j, i, k))
                    throw Error("structure constants are not antisymmetric");
    Tensor3 copy(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                copy(i, j, k) = c(i, j, k);
                copy(j, i, k) = -c(i, j, k);
            }
    return StructureConstants(std::move(copy));
}

Vec StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    Vec r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = c_(i, j, k);
    return r;
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    Vec r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0.0) continue;
            const double xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) r[k] += xy * c_(i, j, k);
        }
    }
    return r;
}

namespace {

CholeskyFactor factor_or_throw(const Mat& g) {
    if (g.rows() != g.cols()) throw FactorizationError("inner product matrix is not square");
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g(i, j) != g(j, i)) throw FactorizationError("inner product matrix is not symmetric");
    auto chol = CholeskyFactor::compute(g);
    if (!chol) throw FactorizationError("inner product matrix is not positive definite");
    return std::move(*chol);
}

}  // namespace

InnerProduct::InnerProduct(Mat g) : g_(std::move(g)), chol_(factor_or_throw(g_)) {}

double InnerProduct::norm(const Vec& x) const {
    return std::sqrt(std::max(0.0, inner(x, x)));
}

MetricLieAlgebra::MetricLieAlgebra(StructureConstants sc, InnerProduct metric,
                                   std::vector<std::string> labels, Provenance provenance)
    : sc_(std::move(sc)), metric_(std::move(metric)), labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
    if (sc_.dim() != metric_.dim() || sc_.dim() != labels_.size())
        throw Error("algebra dimension mismatch between structure constants, metric and labels");
}

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::antisymmetry:
            os << "antisymmetry violated at (" << index[0] << "," << index[1] << "," << index[2]
               << "), residual " << residual;
            break;
        case Kind::jacobi:
            os << "Jacobi identity violated at (" << index[0] << "," << index[1] << "," << index[2]
               << "), residual " << residual;
            break;
        case Kind::metric_asymmetry:
            os << "metric asymmetry at (" << index[0] << "," << index[1] << "), residual " << residual;
            break;
        case Kind::metric_not_spd:
            os << "metric is not positive definite (pivot " << index[0] << ")";
            break;
        case Kind::dimension_mismatch:
            os << "dimension mismatch";
            break;
    }
    return os.str();
}

std::string ValidationResult::describe() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].describe();
    }
    return os.str();
}

ValidationResult validate(std::size_t n, const Tensor3& c, const Mat& g, double tol_jacobi) {
    ValidationResult result;
    if (c.dim() != n || g.rows() != n || g.cols() != n) {
        result.violations.push_back({Violation::Kind::dimension_mismatch, {n, c.dim(), g.rows()}, 0.0});
        return result;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (c(i, j, k) != -c(j, i, k))
                    result.violations.push_back({Violation::Kind::antisymmetry,
                                                 {j, i, k},
                                                 std::abs(c(i, j, k) + c(j, i, k))});

    const double cmax = c.max_abs();
    const double jacobi_thr = tol_jacobi * cmax;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                double worst = 0.0;
                for (std::size_t l = 0; l < n; ++l) {
                    double s = 0.0;
                    for (std::size_t m = 0; m < n; ++m)
                        s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
                    worst = std::max(worst, std::abs(s));
                }
                if (worst > jacobi_thr)
                    result.violations.push_back({Violation::Kind::jacobi, {i, j, k}, worst});
            }

    bool symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g(i, j) != g(j, i)) {
                symmetric = false;
                result.violations.push_back({Violation::Kind::metric_asymmetry,
                                             {j, i, 0},
                                             std::abs(g(i, j) - g(j, i))});
            }
    if (symmetric && !CholeskyFactor::compute(g))
        result.violations.push_back({Violation::Kind::metric_not_spd, {0, 0, 0}, 0.0});

    return result;
}

ValidationResult validate(const MetricLieAlgebra& mla, double tol_jacobi) {
    return validate(mla.dim(), mla.structure().coefficients(), mla.metric().matrix(), tol_jacobi);
}

Vec solve_spd(const InnerProduct& g, const Vec& rhs) {
    if (rhs.size() != g.dim()) throw Error("solve_spd dimension mismatch");
    return g.solve(rhs);
}

namespace {

std::vector<Vec> gram_schmidt_impl(std::size_t n, const Mat& g) {
    std::vector<Vec> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec v = basis_vector(n, i);
        // Two orthogonalization passes keep the Gram matrix at identity well
        // below the 1e-10 contract even for poorly scaled metrics.
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& w : basis) axpy(v, -bilinear(g, v, w), w);
        const double norm = std::sqrt(std::max(0.0, bilinear(g, v, v)));
        if (norm < kDegeneracyEps)
            throw DegeneracyError("gram_schmidt: degenerate intermediate vector at index " +
                                  std::to_string(i));
        basis.push_back(scaled(v, 1.0 / norm));
    }
    return basis;
}

}  // namespace

std::vector<Vec> gram_schmidt(const MetricLieAlgebra& mla) {
    return gram_schmidt_impl(mla.dim(), mla.metric().matrix());
}

std::vector<Vec> gram_schmidt(const Mat& g) {
    return gram_schmidt_impl(g.rows(), g);
}

}  // namespace liegeo

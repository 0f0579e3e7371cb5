#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liegeo/linalg.hpp"

namespace liegeo {

enum class ProvenanceKind { generic, special, one_dim_commutator, tangent_lift };

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::generic;
    std::string detail;  // e.g. "special(n=2,lambda=1)" or the parent tag for lifts

    static Provenance generic() { return {ProvenanceKind::generic, "generic"}; }
};

struct Triplet {
    std::size_t i, j, k;
    double value;
};

/// Structure constants c[i][j][k] of a Lie bracket, [e_i,e_j] = sum_k c[i][j][k] e_k.
/// Antisymmetry in (i,j) is structural: only i<j entries are taken from input
/// and the rest is filled by reflection, so c[i][j][k] == -c[j][i][k] exactly.
class StructureConstants {
public:
    static StructureConstants zero(std::size_t n);

    // Accumulates triplets; any (i,j) order is accepted and folded with the
    // right sign. A nonzero value at i == j is rejected.
    static StructureConstants from_triplets(std::size_t n, const std::vector<Triplet>& triplets);

    // Requires the dense tensor to be exactly antisymmetric; callers that
    // ingest untrusted data run validate() on the raw tensor first.
    static StructureConstants from_dense(const Tensor3& c);

    std::size_t dim() const { return c_.dim(); }
    double at(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
    const Tensor3& coefficients() const { return c_; }
    double max_abs() const { return c_.max_abs(); }

    Vec bracket_basis(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;

private:
    explicit StructureConstants(Tensor3 c) : c_(std::move(c)) {}
    Tensor3 c_;
};

/// Inner product on the algebra. Construction requires an exactly symmetric,
/// positive definite matrix and caches the Cholesky factor for solves.
class InnerProduct {
public:
    explicit InnerProduct(Mat g);

    std::size_t dim() const { return g_.rows(); }
    const Mat& matrix() const { return g_; }

    double inner(const Vec& x, const Vec& y) const { return bilinear(g_, x, y); }
    double norm(const Vec& x) const;

    // Solves g w = rhs.
    Vec solve(const Vec& rhs) const { return chol_.solve(rhs); }

private:
    Mat g_;
    CholeskyFactor chol_;
};

/// A Lie algebra with a fixed basis, structure constants and inner product.
/// Immutable after construction; all operations on it are pure.
class MetricLieAlgebra {
public:
    MetricLieAlgebra(StructureConstants sc, InnerProduct metric, std::vector<std::string> labels,
                     Provenance provenance);

    std::size_t dim() const { return sc_.dim(); }
    const StructureConstants& structure() const { return sc_; }
    const InnerProduct& metric() const { return metric_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Provenance& provenance() const { return provenance_; }

    Vec bracket(const Vec& x, const Vec& y) const { return sc_.bracket(x, y); }
    double inner(const Vec& x, const Vec& y) const { return metric_.inner(x, y); }

private:
    StructureConstants sc_;
    InnerProduct metric_;
    std::vector<std::string> labels_;
    Provenance provenance_;
};

struct Violation {
    enum class Kind { antisymmetry, jacobi, metric_asymmetry, metric_not_spd, dimension_mismatch };
    Kind kind;
    std::array<std::size_t, 3> index{0, 0, 0};
    double residual = 0.0;

    std::string describe() const;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

// Raw-data validation: checks antisymmetry exactly, the Jacobi identity within
// tol_jacobi relative to max |c|, exact metric symmetry and positive
// definiteness. Violations are returned as data, never thrown.
ValidationResult validate(std::size_t n, const Tensor3& c, const Mat& g,
                          double tol_jacobi = kDefaultJacobiTol);

ValidationResult validate(const MetricLieAlgebra& mla, double tol_jacobi = kDefaultJacobiTol);

// g w = rhs for the algebra metric.
Vec solve_spd(const InnerProduct& g, const Vec& rhs);

// g-orthonormalizes the canonical basis e_1..e_n in index order.
// Throws DegeneracyError when an intermediate vector drops below the
// degeneracy threshold (a non-SPD metric slipped through).
std::vector<Vec> gram_schmidt(const MetricLieAlgebra& mla);

// Same procedure against a plain SPD matrix; used where only a metric block
// is available (no algebra around it).
std::vector<Vec> gram_schmidt(const Mat& g);

}  // namespace liegeo

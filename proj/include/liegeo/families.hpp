#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liegeo/lift.hpp"

namespace liegeo {

/// Solvable family: abelian ideal spanned by u_1..u_n plus an element b with
/// [b,x] = x on the ideal, b orthogonal to it, lambda = g(b,b).
struct SpecialGroupSpec {
    std::size_t n = 1;
    double lambda = 1.0;
    Mat u_metric;  // empty means identity

    Mat effective_u_metric() const { return u_metric.empty() ? Mat::identity(n) : u_metric; }
};

/// One-dimensional-commutator family: orthonormal basis u_1..u_n of Gamma and
/// a unit vector e orthogonal to it, with
///   [x,e] = g(a,x) e,   [x,y] = g(f(x),y) e.
/// The matrix f is stored as f[i][j] = g(f(u_i), u_j), i.e. row i is the image
/// of u_i; it must be exactly skew-symmetric.
struct OneDimCommutatorSpec {
    std::size_t n = 1;
    Vec a;
    Mat f;

    Vec apply_f(const Vec& x) const;       // row-vector action, (f(x))_j = sum_i x_i f[i][j]
    Vec apply_f_twice(const Vec& x) const;
};

struct SpecError : Error {
    explicit SpecError(const std::string& msg) : Error(msg) {}
    SpecError(const std::string& msg, std::vector<std::array<std::size_t, 3>> triples)
        : Error(msg), bad_triples(std::move(triples)) {}

    std::vector<std::array<std::size_t, 3>> bad_triples;
};

enum class TargetSpace { base, lifted };

// Claims evaluated from the families' printed closed forms, never from the
// geometry oracle; the harness pairs them with oracle output.
struct ConnectionClaim {
    std::string id;
    TargetSpace space;
    std::size_t i, j;  // nabla_{e_i} e_j on the target algebra
    Vec value;
    std::string desc;
};

struct CurvatureClaim {
    std::string id;
    TargetSpace space;
    std::size_t i, j, k;  // R(e_i,e_j)e_k
    Vec value;
    std::string desc;
};

struct ScalarClaim {
    enum class Kind { sectional, ricci_pair, ricci_direction };

    std::string id;
    TargetSpace space;
    Kind kind;
    Vec x, y;  // plane, Ricci pair, or direction (y unused for directions)
    double value;
    std::string desc;
    bool gating = true;  // false marks evaluation outside the formula's stated hypothesis
};

struct ClosedFormSet {
    std::vector<ConnectionClaim> connections;
    std::vector<CurvatureClaim> curvatures;
    std::vector<ScalarClaim> scalars;
};

// Formula-id registry. Connection/curvature ids name the lift pattern of the
// two (or three) arguments; scalar ids name the sampled quantity.
const std::vector<std::string>& formula_registry_special();
const std::vector<std::string>& formula_registry_one_dim_commutator();

MetricLieAlgebra build_special(const SpecialGroupSpec& spec);

// Throws SpecError listing the violating (i,j,k) triples when the closure
// constraint a_i f[j][k] + a_j f[k][i] + a_k f[i][j] = 0 fails, or when
// (a,f) = (0,0).
MetricLieAlgebra build_one_dim_commutator(const OneDimCommutatorSpec& spec);

SpecialGroupSpec random_special(std::size_t n, std::uint64_t seed);
OneDimCommutatorSpec random_one_dim_commutator(std::size_t n, std::uint64_t seed);

ClosedFormSet special_closed_forms(const SpecialGroupSpec& spec, std::uint64_t seed = 0);
ClosedFormSet g2_closed_forms(const OneDimCommutatorSpec& spec, std::uint64_t seed = 0);

}  // namespace liegeo

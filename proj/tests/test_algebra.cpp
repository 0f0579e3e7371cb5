#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liegeo/families.hpp"
#include "liegeo/harness.hpp"
#include "liegeo/rng.hpp"

using namespace liegeo;

namespace {

MetricLieAlgebra abelian(std::size_t n) {
    return MetricLieAlgebra(StructureConstants::zero(n), InnerProduct(Mat::identity(n)),
                            std::vector<std::string>(n, "e"), Provenance::generic());
}

Tensor3 epsilon_tensor() {
    Tensor3 c(3);
    c(0, 1, 2) = 1.0;
    c(1, 0, 2) = -1.0;
    c(1, 2, 0) = 1.0;
    c(2, 1, 0) = -1.0;
    c(2, 0, 1) = 1.0;
    c(0, 2, 1) = -1.0;
    return c;
}

}  // namespace

TEST_CASE("cholesky solve: identity and diagonal") {
    InnerProduct id3(Mat::identity(3));
    const Vec rhs = {1.0, 2.0, 3.0};
    CHECK(max_abs_diff(solve_spd(id3, rhs), rhs) == 0.0);

    Mat d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    const Vec w = solve_spd(InnerProduct(d), {2.0, 4.0});
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cholesky solve: residual on random SPD systems") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 7;
        SplitMix64 rng(derive_seed(seed, "spd_residual", 0));
        Mat a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
        Mat g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                double s = (i == j) ? 1.0 : 0.0;
                for (std::size_t k = 0; k < n; ++k) s += a(k, i) * a(k, j);
                g(i, j) = g(j, i) = s;
            }
        const Vec rhs = random_vector(rng, n, -5.0, 5.0);
        const Vec w = solve_spd(InnerProduct(g), rhs);
        const Vec residual = vsub(matvec(g, w), rhs);
        CHECK(max_abs(residual) <= 1e-12 * std::max(1.0, max_abs(rhs)));
    }
}

TEST_CASE("non-SPD matrices are rejected at construction") {
    Mat bad(2, 2);
    bad(0, 0) = 1.0;
    bad(0, 1) = bad(1, 0) = 2.0;
    bad(1, 1) = 1.0;
    CHECK_THROWS_AS(InnerProduct{bad}, FactorizationError);

    Mat asym(2, 2, 0.0);
    asym(0, 0) = asym(1, 1) = 1.0;
    asym(0, 1) = 0.5;
    CHECK_THROWS_AS(InnerProduct{asym}, FactorizationError);
}

TEST_CASE("validate: abelian algebra is clean") {
    CHECK(validate(abelian(4)).ok());
}

TEST_CASE("validate: antisymmetry violation is reported with its indices") {
    Tensor3 c(3);
    c(0, 1, 2) = 1.0;
    c(1, 0, 2) = 1.0;  // should be -1
    const ValidationResult vr = validate(3, c, Mat::identity(3));
    REQUIRE_FALSE(vr.ok());
    bool found = false;
    for (const Violation& v : vr.violations)
        found = found || (v.kind == Violation::Kind::antisymmetry && v.index[0] == 0 && v.index[1] == 1 &&
                          v.index[2] == 2);
    CHECK(found);
}

TEST_CASE("validate: so(3) satisfies the Jacobi identity") {
    const Tensor3 c = epsilon_tensor();
    CHECK(validate(3, c, Mat::identity(3)).ok());

    // independent brute-force check of the same identity
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < 3; ++m)
                        s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
                    worst = std::max(worst, std::abs(s));
                }
    CHECK(worst == 0.0);
}

TEST_CASE("validate: broken Jacobi and broken metric are reported") {
    // [e0,e1]=e0 together with [e0,e2]=e1 violates Jacobi on (0,1,2)
    Tensor3 c(3);
    c(0, 1, 0) = 1.0;
    c(1, 0, 0) = -1.0;
    c(0, 2, 1) = 1.0;
    c(2, 0, 1) = -1.0;
    const ValidationResult vr = validate(3, c, Mat::identity(3));
    bool jacobi = false;
    for (const Violation& v : vr.violations) jacobi = jacobi || v.kind == Violation::Kind::jacobi;
    CHECK(jacobi);

    Mat asym = Mat::identity(2);
    asym(0, 1) = 0.25;
    const ValidationResult vm = validate(2, Tensor3(2), asym);
    REQUIRE_FALSE(vm.ok());
    CHECK(vm.violations.front().kind == Violation::Kind::metric_asymmetry);

    Mat notspd = Mat::identity(2);
    notspd(0, 0) = -1.0;
    const ValidationResult vs = validate(2, Tensor3(2), notspd);
    REQUIRE_FALSE(vs.ok());
    CHECK(vs.violations.front().kind == Violation::Kind::metric_not_spd);
}

TEST_CASE("structure constants: triplet reflection and dense ingestion") {
    const auto sc = StructureConstants::from_triplets(3, {{0, 1, 2, 1.0}});
    CHECK(sc.at(0, 1, 2) == 1.0);
    CHECK(sc.at(1, 0, 2) == -1.0);
    CHECK(sc.at(0, 0, 2) == 0.0);

    CHECK_NOTHROW(StructureConstants::from_dense(epsilon_tensor()));
    Tensor3 bad(2);
    bad(0, 1, 0) = 1.0;
    CHECK_THROWS_AS(StructureConstants::from_dense(bad), Error);
}

TEST_CASE("bracket antisymmetry over seeded random vector pairs") {
    std::vector<MetricLieAlgebra> algebras;
    algebras.push_back(MetricLieAlgebra(StructureConstants::from_dense(epsilon_tensor()),
                                        InnerProduct(Mat::identity(3)), {"e1", "e2", "e3"},
                                        Provenance::generic()));
    algebras.push_back(build_special(random_special(3, 11)));
    algebras.push_back(build_one_dim_commutator(random_one_dim_commutator(3, 12)));

    for (const MetricLieAlgebra& mla : algebras) {
        REQUIRE(validate(mla).ok());
        for (std::uint64_t t = 0; t < 100; ++t) {
            SplitMix64 rng(derive_seed(t, "bracket_antisym", 0));
            const Vec x = random_vector(rng, mla.dim());
            const Vec y = random_vector(rng, mla.dim());
            const Vec xy = mla.bracket(x, y);
            const Vec yx = mla.bracket(y, x);
            CHECK(max_abs(vadd(xy, yx)) <= 1e-13);
        }
    }
}

TEST_CASE("gram_schmidt: identity, diagonal and random SPD metrics") {
    const auto id_basis = gram_schmidt(abelian(3));
    for (std::size_t i = 0; i < 3; ++i) CHECK(max_abs_diff(id_basis[i], basis_vector(3, i)) == 0.0);

    Mat d(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const auto diag_basis = gram_schmidt(d);
    CHECK(diag_basis[0][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(diag_basis[1][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Mat gu = random_special(5, seed).u_metric;
        const auto basis = gram_schmidt(gu);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(std::abs(bilinear(gu, basis[i], basis[j]) - (i == j ? 1.0 : 0.0)) <= 1e-10);

        // expressing each e_i in the output basis reproduces it
        for (std::size_t i = 0; i < 5; ++i) {
            Vec rebuilt(5, 0.0);
            const Vec ei = basis_vector(5, i);
            for (const Vec& v : basis) axpy(rebuilt, bilinear(gu, ei, v), v);
            CHECK(max_abs_diff(rebuilt, ei) <= 1e-9);
        }
    }
}

TEST_CASE("gram_schmidt: degenerate metric raises a degeneracy error") {
    Mat g(2, 2, 1.0);  // rank one
    CHECK_THROWS_AS(gram_schmidt(g), DegeneracyError);
}

TEST_CASE("algebra construction rejects inconsistent dimensions") {
    CHECK_THROWS_AS(MetricLieAlgebra(StructureConstants::zero(3), InnerProduct(Mat::identity(2)),
                                     {"a", "b"}, Provenance::generic()),
                    Error);
}

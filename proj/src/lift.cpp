#include "liegeo/lift.hpp"

namespace liegeo {

Vec LiftIndexing::embed_complete(const Vec& x) const {
    Vec w(lifted_dim(), 0.0);
    for (std::size_t i = 0; i < base_dim; ++i) w[i] = x[i];
    return w;
}

Vec LiftIndexing::embed_vertical(const Vec& x) const {
    Vec w(lifted_dim(), 0.0);
    for (std::size_t i = 0; i < base_dim; ++i) w[base_dim + i] = x[i];
    return w;
}

Vec LiftIndexing::complete_part(const Vec& w) const {
    return Vec(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(base_dim));
}

Vec LiftIndexing::vertical_part(const Vec& w) const {
    return Vec(w.begin() + static_cast<std::ptrdiff_t>(base_dim), w.end());
}

MetricLieAlgebra tangent_lift(const MetricLieAlgebra& mla) {
    const std::size_t n = mla.dim();
    const LiftIndexing ix{n};
    const Tensor3& c = mla.structure().coefficients();

    // [e_i^c, e_j^c] = [e_i,e_j]^c stored once per unordered pair;
    // [e_i^v, e_j^c] = [e_i,e_j]^v stored for every ordered base pair — the
    // reversed order [x^c,y^v] then follows from antisymmetric storage.
    std::vector<Triplet> triplets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (c(i, j, k) != 0.0)
                    triplets.push_back({ix.complete(i), ix.complete(j), ix.complete(k), c(i, j, k)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (c(i, j, k) != 0.0)
                    triplets.push_back({ix.vertical(i), ix.complete(j), ix.vertical(k), c(i, j, k)});
        }

    Mat g(2 * n, 2 * n);
    const Mat& base_g = mla.metric().matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = base_g(i, j);
            g(n + i, n + j) = base_g(i, j);
        }

    std::vector<std::string> labels(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = mla.labels()[i] + "^c";
        labels[n + i] = mla.labels()[i] + "^v";
    }

    return MetricLieAlgebra(StructureConstants::from_triplets(2 * n, triplets), InnerProduct(std::move(g)),
                            std::move(labels),
                            Provenance{ProvenanceKind::tangent_lift,
                                       "tangent-lift(" + mla.provenance().detail + ")"});
}

ConnectionCoefficients lifted_connection_closed_form(const MetricLieAlgebra& mla) {
    const std::size_t n = mla.dim();
    const LiftIndexing ix{n};
    const ConnectionCoefficients base = levi_civita(mla);

    std::vector<Vec> adstar(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = basis_vector(n, i);
        for (std::size_t j = 0; j < n; ++j)
            adstar[i * n + j] = coadjoint(mla, ei, basis_vector(n, j));
    }

    ConnectionCoefficients conn{2 * n, Tensor3(2 * n)};
    auto put = [&](std::size_t a, std::size_t b, const Vec& v, bool vertical_block) {
        const std::size_t off = vertical_block ? n : 0;
        for (std::size_t k = 0; k < n; ++k) conn.gamma(a, b, off + k) = v[k];
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec nab = base.apply_basis(i, j);

            put(ix.complete(i), ix.complete(j), nab, false);

            Vec vv = nab;
            axpy(vv, -0.5, mla.structure().bracket_basis(i, j));
            put(ix.vertical(i), ix.vertical(j), vv, false);

            Vec cv = nab;
            axpy(cv, 0.5, adstar[j * n + i]);
            put(ix.complete(i), ix.vertical(j), cv, true);

            Vec vc = nab;
            axpy(vc, 0.5, adstar[i * n + j]);
            put(ix.vertical(i), ix.complete(j), vc, true);
        }
    return conn;
}

}  // namespace liegeo

#pragma once

#include "liegeo/geometry.hpp"

namespace liegeo {

/// Index convention on the tangent algebra of a base of dimension n:
/// complete lifts occupy 0..n-1, vertical lifts occupy n..2n-1.
struct LiftIndexing {
    std::size_t base_dim = 0;

    std::size_t complete(std::size_t i) const { return i; }
    std::size_t vertical(std::size_t i) const { return base_dim + i; }
    std::size_t lifted_dim() const { return 2 * base_dim; }

    bool is_vertical(std::size_t a) const { return a >= base_dim; }
    std::size_t base_index(std::size_t a) const { return a >= base_dim ? a - base_dim : a; }

    // Embeds a base vector into the complete / vertical block.
    Vec embed_complete(const Vec& x) const;
    Vec embed_vertical(const Vec& x) const;
    Vec complete_part(const Vec& w) const;
    Vec vertical_part(const Vec& w) const;
};

// Tangent Lie algebra with the lifted brackets
//   [x^c,y^c] = [x,y]^c,  [x^v,y^c] = [x,y]^v,  [x^v,y^v] = 0
// and the block-diagonal lifted metric (two copies of g, zero cross block).
// Labels become "<base>^c" / "<base>^v".
MetricLieAlgebra tangent_lift(const MetricLieAlgebra& mla);

// Closed form of the lifted Levi-Civita connection, assembled from the base
// connection and coadjoint operators:
//   nabla~_{x^c} y^c = (nabla_x y)^c
//   nabla~_{x^v} y^v = (nabla_x y - (1/2)[x,y])^c
//   nabla~_{x^c} y^v = (nabla_x y + (1/2) ad*_y x)^v
//   nabla~_{x^v} y^c = (nabla_x y + (1/2) ad*_x y)^v
// Kept fully independent of levi_civita(tangent_lift(...)) so the two routes
// can be compared against each other.
ConnectionCoefficients lifted_connection_closed_form(const MetricLieAlgebra& mla);

}  // namespace liegeo

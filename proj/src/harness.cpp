#include "liegeo/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace liegeo {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "error";
    }
}

namespace {

// Canonical report order: suite-level checks first, then the registry.
int registry_rank(const std::string& id) {
    const std::string prefix = id.substr(0, id.find('.'));
    if (prefix == "EQ4") return 0;
    if (prefix == "G1") return 1;
    if (prefix == "E5") return 10;
    if (prefix == "L1") return 11;
    if (prefix == "L2") return 12;
    if (prefix == "T1") return 13;
    if (prefix == "E12") return 14;
    if (prefix == "E16") return 20;
    if (prefix == "L3") return 21;
    if (prefix == "L4") return 22;
    if (prefix == "L5") return 23;
    if (prefix == "E20") return 24;
    if (prefix == "E21") return 25;
    return 99;
}

ComparisonEntry make_entry(std::string id, std::string desc, std::vector<double> claimed,
                           std::vector<double> oracle, bool scalar, double tol, bool gating) {
    ComparisonEntry e;
    e.formula_id = std::move(id);
    e.argument_desc = std::move(desc);
    e.claimed = std::move(claimed);
    e.oracle = std::move(oracle);
    e.scalar = scalar;
    e.abs_diff = max_abs_diff(e.claimed, e.oracle);
    e.status = e.abs_diff <= tol ? Status::pass : Status::fail;
    e.gating = gating;
    return e;
}

}  // namespace

bool ComparisonReport::all_gating_passed() const { return gating_failures() == 0; }

std::size_t ComparisonReport::gating_failures() const {
    std::size_t count = 0;
    for (const auto& e : entries)
        if (e.gating && e.status == Status::fail) ++count;
    return count;
}

void ComparisonReport::finalize() {
    std::stable_sort(entries.begin(), entries.end(), [](const ComparisonEntry& a, const ComparisonEntry& b) {
        const int ra = registry_rank(a.formula_id), rb = registry_rank(b.formula_id);
        if (ra != rb) return ra < rb;
        return a.formula_id < b.formula_id;
    });
    summary.clear();
    for (const auto& e : entries) {
        FormulaTally& t = summary[e.formula_id];
        switch (e.status) {
            case Status::pass: ++t.pass; break;
            case Status::fail: ++t.fail; break;
            case Status::error: ++t.error; break;
        }
    }
}

std::vector<ComparisonEntry> compare_connection(const std::vector<ConnectionClaim>& claims,
                                                const MetricLieAlgebra& mla,
                                                const ConnectionCoefficients& oracle, double tol) {
    if (oracle.n != mla.dim()) throw Error("compare_connection: dimension mismatch");
    std::vector<ComparisonEntry> entries;
    entries.reserve(claims.size());
    for (const auto& claim : claims) {
        if (claim.i >= oracle.n || claim.j >= oracle.n || claim.value.size() != oracle.n)
            throw Error("compare_connection: dimension mismatch in claim " + claim.id);
        entries.push_back(make_entry(claim.id, claim.desc, claim.value,
                                     oracle.apply_basis(claim.i, claim.j), false, tol, true));
    }
    return entries;
}

std::vector<ComparisonEntry> compare_curvature(const std::vector<CurvatureClaim>& claims,
                                               const MetricLieAlgebra& mla, const CurvatureTensor& oracle,
                                               double tol) {
    if (oracle.n != mla.dim()) throw Error("compare_curvature: dimension mismatch");
    std::vector<ComparisonEntry> entries;
    entries.reserve(claims.size());
    for (const auto& claim : claims) {
        if (claim.i >= oracle.n || claim.j >= oracle.n || claim.k >= oracle.n ||
            claim.value.size() != oracle.n)
            throw Error("compare_curvature: dimension mismatch in claim " + claim.id);
        entries.push_back(make_entry(claim.id, claim.desc, claim.value,
                                     oracle.apply_basis(claim.i, claim.j, claim.k), false, tol, true));
    }
    return entries;
}

std::vector<ComparisonEntry> compare_scalars(const std::vector<ScalarClaim>& claims,
                                             const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                                             double tol) {
    std::vector<ComparisonEntry> entries;
    entries.reserve(claims.size());
    for (const auto& claim : claims) {
        try {
            double oracle_value = 0.0;
            switch (claim.kind) {
                case ScalarClaim::Kind::sectional:
                    oracle_value = sectional(mla, curv, claim.x, claim.y);
                    break;
                case ScalarClaim::Kind::ricci_pair:
                    oracle_value = ricci(mla, curv, claim.x, claim.y);
                    break;
                case ScalarClaim::Kind::ricci_direction:
                    oracle_value = ricci_direction(mla, curv, claim.x);
                    break;
            }
            entries.push_back(
                make_entry(claim.id, claim.desc, {claim.value}, {oracle_value}, true, tol, claim.gating));
        } catch (const DegeneratePlaneError&) {
            ComparisonEntry e;
            e.formula_id = claim.id;
            e.argument_desc = claim.desc;
            e.claimed = {claim.value};
            e.scalar = true;
            e.status = Status::error;
            e.gating = claim.gating;
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

std::string instance_description(const SuiteInput& input) {
    std::ostringstream os;
    if (const auto* sp = std::get_if<SpecialGroupSpec>(&input)) {
        os << "special(n=" << sp->n << ",lambda=" << sp->lambda;
        if (!sp->u_metric.empty() && !(sp->u_metric == Mat::identity(sp->n))) os << ",u_metric=custom";
        os << ")";
    } else {
        const auto& g2 = std::get<OneDimCommutatorSpec>(input);
        os << "one_dim_commutator(n=" << g2.n << ",a=" << (max_abs(g2.a) == 0.0 ? "zero" : "nonzero")
           << ")";
    }
    return os.str();
}

ComparisonReport run_family_suite(const SuiteInput& input, std::uint64_t seed, double tol) {
    ComparisonReport report;
    report.tolerance = tol;
    report.seed = seed;
    report.instance_desc = instance_description(input);

    const bool is_special = std::holds_alternative<SpecialGroupSpec>(input);
    const MetricLieAlgebra base = is_special ? build_special(std::get<SpecialGroupSpec>(input))
                                             : build_one_dim_commutator(std::get<OneDimCommutatorSpec>(input));
    {
        const ValidationResult vr = validate(base);
        if (!vr.ok()) throw SpecError("instance failed validation: " + vr.describe());
    }

    const ConnectionCoefficients base_conn = levi_civita(base);
    const CurvatureTensor base_curv = riemann(base, base_conn);
    const MetricLieAlgebra lifted = tangent_lift(base);
    {
        const ValidationResult vr = validate(lifted);
        if (!vr.ok()) throw SpecError("tangent lift failed validation: " + vr.describe());
    }
    const ConnectionCoefficients lift_conn = levi_civita(lifted);
    const CurvatureTensor lift_curv = riemann(lifted, lift_conn);

    // Lifted-connection closed form against the lifted oracle connection.
    const ConnectionCoefficients closed = lifted_connection_closed_form(base);
    for (std::size_t a = 0; a < lifted.dim(); ++a)
        for (std::size_t b = 0; b < lifted.dim(); ++b)
            report.entries.push_back(make_entry(
                "EQ4.conn", "D[" + lifted.labels()[a] + "] " + lifted.labels()[b],
                closed.apply_basis(a, b), lift_conn.apply_basis(a, b), false, tol, true));

    if (is_special) {
        const auto& spec = std::get<SpecialGroupSpec>(input);
        const SectionalScan scan = constant_sectional_check(base, base_curv, 100, seed, tol);
        const double claimed = -1.0 / spec.lambda;
        ComparisonEntry e;
        e.formula_id = "G1.constant_sectional";
        e.argument_desc = "K over basis planes + 100 random planes";
        e.claimed = {claimed};
        e.oracle = {scan.value};
        e.scalar = true;
        e.abs_diff = std::max(std::abs(scan.value - claimed), scan.max_deviation);
        e.status = e.abs_diff <= tol ? Status::pass : Status::fail;
        report.entries.push_back(std::move(e));
    }

    const ClosedFormSet forms = is_special
                                    ? special_closed_forms(std::get<SpecialGroupSpec>(input), seed)
                                    : g2_closed_forms(std::get<OneDimCommutatorSpec>(input), seed);

    auto by_space = [](const auto& claims, TargetSpace space) {
        std::decay_t<decltype(claims)> out;
        for (const auto& c : claims)
            if (c.space == space) out.push_back(c);
        return out;
    };

    for (auto& e : compare_connection(by_space(forms.connections, TargetSpace::base), base, base_conn, tol))
        report.entries.push_back(std::move(e));
    for (auto& e :
         compare_connection(by_space(forms.connections, TargetSpace::lifted), lifted, lift_conn, tol))
        report.entries.push_back(std::move(e));
    for (auto& e : compare_curvature(by_space(forms.curvatures, TargetSpace::base), base, base_curv, tol))
        report.entries.push_back(std::move(e));
    for (auto& e :
         compare_curvature(by_space(forms.curvatures, TargetSpace::lifted), lifted, lift_curv, tol))
        report.entries.push_back(std::move(e));
    for (auto& e : compare_scalars(by_space(forms.scalars, TargetSpace::base), base, base_curv, tol))
        report.entries.push_back(std::move(e));
    for (auto& e : compare_scalars(by_space(forms.scalars, TargetSpace::lifted), lifted, lift_curv, tol))
        report.entries.push_back(std::move(e));

    report.finalize();
    return report;
}

namespace {

MetricLieAlgebra make_so3() {
    const std::vector<Triplet> eps = {{0, 1, 2, 1.0}, {0, 2, 1, -1.0}, {1, 2, 0, 1.0}};
    return MetricLieAlgebra(StructureConstants::from_triplets(3, eps), InnerProduct(Mat::identity(3)),
                            {"e1", "e2", "e3"}, Provenance{ProvenanceKind::generic, "so3"});
}

Mat diag2(double a, double b) {
    Mat m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

const std::vector<NamedFixture>& fixtures() {
    static const std::vector<NamedFixture> all = [] {
        std::vector<NamedFixture> v;
        v.push_back({"hyperbolic2", SpecialGroupSpec{1, 1.0, {}}});
        v.push_back({"special_n2", SpecialGroupSpec{2, 1.0, {}}});
        v.push_back({"special_scaled", SpecialGroupSpec{2, 2.0, diag2(1.0, 4.0)}});
        {
            OneDimCommutatorSpec heisenberg;
            heisenberg.n = 2;
            heisenberg.a = {0.0, 0.0};
            heisenberg.f = Mat(2, 2);
            heisenberg.f(0, 1) = 1.0;
            heisenberg.f(1, 0) = -1.0;
            v.push_back({"heisenberg", std::move(heisenberg)});
        }
        {
            OneDimCommutatorSpec affine;
            affine.n = 2;
            affine.a = {1.0, 0.0};
            affine.f = Mat(2, 2);
            v.push_back({"g2_affine", std::move(affine)});
        }
        {
            OneDimCommutatorSpec mixed;
            mixed.n = 3;
            mixed.a = {1.0, 0.0, 0.0};
            const Vec w = {0.0, 1.0, 0.0};
            mixed.f = Mat(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) mixed.f(i, j) = mixed.a[i] * w[j] - w[i] * mixed.a[j];
            v.push_back({"g2_mixed", std::move(mixed)});
        }
        v.push_back({"so3", make_so3()});
        return v;
    }();
    return all;
}

const NamedFixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw Error("unknown fixture: " + name);
}

std::size_t commutator_dimension(const MetricLieAlgebra& mla) {
    const std::size_t n = mla.dim();
    const double scale = std::max(1.0, mla.structure().max_abs());
    std::vector<Vec> span;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = mla.structure().bracket_basis(i, j);
            for (int pass = 0; pass < 2; ++pass)
                for (const Vec& w : span) axpy(v, -edot(v, w), w);
            const double norm = std::sqrt(edot(v, v));
            if (norm > 1e-10 * scale) span.push_back(scaled(v, 1.0 / norm));
        }
    return span.size();
}

}  // namespace liegeo

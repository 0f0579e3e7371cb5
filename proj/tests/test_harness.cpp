#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "liegeo/harness.hpp"

using namespace liegeo;

namespace {

ComparisonReport special_n2_report() {
    return run_family_suite(SuiteInput{std::get<SpecialGroupSpec>(fixture("special_n2").value)}, 0, 1e-9);
}

ComparisonReport heisenberg_report() {
    return run_family_suite(SuiteInput{std::get<OneDimCommutatorSpec>(fixture("heisenberg").value)}, 0,
                           1e-9);
}

}  // namespace

TEST_CASE("compare_connection: identical input, tolerance semantics, dimension checks") {
    const auto mla = build_special(SpecialGroupSpec{2, 1.0, {}});
    const auto conn = levi_civita(mla);

    std::vector<ConnectionClaim> claims;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            claims.push_back({"E5.xy", TargetSpace::base, i, j, conn.apply_basis(i, j), "pair"});
    for (const auto& e : compare_connection(claims, mla, conn, 1e-9)) {
        CHECK(e.status == Status::pass);
        CHECK(e.abs_diff == 0.0);
    }

    claims[0].value[0] += 1e-12;  // within tolerance
    const auto near = compare_connection(claims, mla, conn, 1e-9);
    CHECK(near[0].status == Status::pass);
    CHECK(near[0].abs_diff == doctest::Approx(1e-12).epsilon(0.01));

    claims[0].value[0] += 1.0;
    CHECK(compare_connection(claims, mla, conn, 1e-9)[0].status == Status::fail);

    std::vector<ConnectionClaim> wrong = {{"E5.xy", TargetSpace::base, 0, 0, Vec(7, 0.0), "bad"}};
    CHECK_THROWS_AS(compare_connection(wrong, mla, conn, 1e-9), Error);
}

TEST_CASE("compare_scalars marks degenerate planes as errors") {
    const auto mla = build_special(SpecialGroupSpec{2, 1.0, {}});
    const auto curv = riemann(mla, levi_civita(mla));
    std::vector<ScalarClaim> claims;
    claims.push_back({"T1.K_xc_yc", TargetSpace::base, ScalarClaim::Kind::sectional,
                      basis_vector(3, 0), basis_vector(3, 0), -1.0, "degenerate", true});
    const auto entries = compare_scalars(claims, mla, curv, 1e-9);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].status == Status::error);
}

TEST_CASE("suite on special_n2: connection-level checks pass, one curvature line fails") {
    const auto report = special_n2_report();

    std::size_t e5 = 0, l1 = 0, eq4 = 0;
    for (const auto& e : report.entries) {
        if (e.formula_id.rfind("E5.", 0) == 0) {
            ++e5;
            CHECK(e.status == Status::pass);
        }
        if (e.formula_id.rfind("L1.", 0) == 0) {
            ++l1;
            CHECK(e.status == Status::pass);
        }
        if (e.formula_id == "EQ4.conn") {
            ++eq4;
            CHECK(e.status == Status::pass);
        }
        if (e.formula_id == "G1.constant_sectional") CHECK(e.status == Status::pass);
    }
    CHECK(e5 == 9);
    CHECK(l1 == 36);
    CHECK(eq4 == 36);

    // the mixed-argument curvature line disagrees with the oracle whenever
    // g(x,z) != 0; statuses are data, not faults
    const FormulaTally& t = report.summary.at("L2.xc_yv_zc");
    CHECK(t.fail > 0);
    CHECK(report.gating_failures() == t.fail);
}

TEST_CASE("suite on heisenberg: the conflicting sectional pair is surfaced") {
    const auto report = heisenberg_report();

    const ComparisonEntry* base_claim = nullptr;
    const ComparisonEntry* lifted_claim = nullptr;
    for (const auto& e : report.entries) {
        if (e.formula_id == "L3.K_xe" && e.argument_desc == "K(u1,e)") base_claim = &e;
        if (e.formula_id == "E20.K_xc_ec" && e.argument_desc == "K(u1^c,e^c)") lifted_claim = &e;
    }
    REQUIRE(base_claim != nullptr);
    REQUIRE(lifted_claim != nullptr);
    CHECK(base_claim->claimed[0] == doctest::Approx(0.25));
    CHECK(lifted_claim->claimed[0] == doctest::Approx(-0.25));
    // the oracle value is the same for both readings of the plane
    CHECK(base_claim->oracle[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(lifted_claim->oracle[0] == doctest::Approx(0.25).epsilon(1e-12));
    // claims 0.5 apart can never both pass at tol 1e-9
    CHECK((base_claim->status == Status::pass) + (lifted_claim->status == Status::pass) <= 1);
    CHECK(base_claim->status == Status::pass);
    CHECK(lifted_claim->status == Status::fail);
    CHECK_FALSE(report.all_gating_passed());
}

TEST_CASE("suite reports: registry coverage and summary integrity") {
    const auto special = special_n2_report();
    for (const std::string& id : formula_registry_special()) {
        const bool present = std::any_of(special.entries.begin(), special.entries.end(),
                                         [&](const ComparisonEntry& e) {
                                             return e.formula_id.rfind(id + ".", 0) == 0;
                                         });
        CHECK_MESSAGE(present, "missing registry id ", id);
    }

    const auto g2 = heisenberg_report();
    for (const std::string& id : formula_registry_one_dim_commutator()) {
        const bool present = std::any_of(g2.entries.begin(), g2.entries.end(),
                                         [&](const ComparisonEntry& e) {
                                             return e.formula_id.rfind(id + ".", 0) == 0;
                                         });
        CHECK_MESSAGE(present, "missing registry id ", id);
    }

    for (const auto* report : {&special, &g2}) {
        std::map<std::string, FormulaTally> recount;
        for (const auto& e : report->entries) {
            auto& t = recount[e.formula_id];
            if (e.status == Status::pass) ++t.pass;
            if (e.status == Status::fail) ++t.fail;
            if (e.status == Status::error) ++t.error;
        }
        REQUIRE(recount.size() == report->summary.size());
        for (const auto& [id, tally] : report->summary) {
            CHECK(recount.at(id).pass == tally.pass);
            CHECK(recount.at(id).fail == tally.fail);
            CHECK(recount.at(id).error == tally.error);
        }
        // no registry id appears with zero entries
        for (const auto& [id, tally] : report->summary)
            CHECK(tally.pass + tally.fail + tally.error > 0);
    }
}

TEST_CASE("suite output is deterministic across runs") {
    const auto a = heisenberg_report();
    const auto b = heisenberg_report();
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].formula_id == b.entries[i].formula_id);
        CHECK(a.entries[i].argument_desc == b.entries[i].argument_desc);
        CHECK(a.entries[i].claimed == b.entries[i].claimed);
        CHECK(a.entries[i].oracle == b.entries[i].oracle);
        CHECK(a.entries[i].abs_diff == b.entries[i].abs_diff);
        CHECK(a.entries[i].status == b.entries[i].status);
        CHECK(a.entries[i].gating == b.entries[i].gating);
    }
}

TEST_CASE("entries follow the canonical registry order") {
    const auto report = special_n2_report();
    auto rank = [](const std::string& id) {
        const std::string prefix = id.substr(0, id.find('.'));
        if (prefix == "EQ4") return 0;
        if (prefix == "G1") return 1;
        if (prefix == "E5") return 10;
        if (prefix == "L1") return 11;
        if (prefix == "L2") return 12;
        if (prefix == "T1") return 13;
        if (prefix == "E12") return 14;
        return 99;
    };
    for (std::size_t i = 1; i < report.entries.size(); ++i) {
        const int prev = rank(report.entries[i - 1].formula_id);
        const int curr = rank(report.entries[i].formula_id);
        CHECK(prev <= curr);
        if (prev == curr) CHECK(report.entries[i - 1].formula_id <= report.entries[i].formula_id);
    }
}

TEST_CASE("fixtures: all seven build and validate") {
    REQUIRE(fixtures().size() == 7);
    for (const NamedFixture& f : fixtures()) {
        if (const auto* sp = std::get_if<SpecialGroupSpec>(&f.value)) {
            CHECK(validate(build_special(*sp)).ok());
        } else if (const auto* g2 = std::get_if<OneDimCommutatorSpec>(&f.value)) {
            CHECK(validate(build_one_dim_commutator(*g2)).ok());
        } else {
            CHECK(validate(std::get<MetricLieAlgebra>(f.value)).ok());
        }
    }

    // so(3) with the round metric has constant sectional curvature 1/4
    const auto& so3 = std::get<MetricLieAlgebra>(fixture("so3").value);
    const auto scan = constant_sectional_check(so3, riemann(so3, levi_civita(so3)), 50, 0);
    CHECK(scan.is_constant);
    CHECK(scan.value == doctest::Approx(0.25).epsilon(1e-10));

    CHECK_THROWS_AS(fixture("nonexistent"), Error);
}

TEST_CASE("commutator dimension distinguishes the families") {
    const auto abelian = MetricLieAlgebra(StructureConstants::zero(3), InnerProduct(Mat::identity(3)),
                                          {"a", "b", "c"}, Provenance::generic());
    CHECK(commutator_dimension(abelian) == 0);
    CHECK(commutator_dimension(std::get<MetricLieAlgebra>(fixture("so3").value)) == 3);
    CHECK(commutator_dimension(build_one_dim_commutator(
              std::get<OneDimCommutatorSpec>(fixture("heisenberg").value))) == 1);
    CHECK(commutator_dimension(build_special(SpecialGroupSpec{3, 1.0, {}})) == 3);
}

TEST_CASE("report-only entries never gate") {
    const auto report = run_family_suite(
        SuiteInput{std::get<SpecialGroupSpec>(fixture("special_scaled").value)}, 0, 1e-9);
    // E12 is evaluated outside its hypothesis at lambda != 1
    bool saw_e12 = false;
    for (const auto& e : report.entries)
        if (e.formula_id.rfind("E12.", 0) == 0) {
            saw_e12 = true;
            CHECK_FALSE(e.gating);
        }
    CHECK(saw_e12);

    std::size_t recount = 0;
    for (const auto& e : report.entries)
        if (e.gating && e.status == Status::fail) ++recount;
    CHECK(recount == report.gating_failures());
}

#pragma once

#include <map>
#include <variant>

#include "liegeo/families.hpp"

namespace liegeo {

enum class Status { pass, fail, error };

std::string to_string(Status s);

struct ComparisonEntry {
    std::string formula_id;
    std::string argument_desc;
    std::vector<double> claimed;
    std::vector<double> oracle;
    bool scalar = false;  // render as a single number instead of a vector
    double abs_diff = 0.0;
    Status status = Status::error;
    bool gating = true;
};

struct FormulaTally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t error = 0;
};

struct ComparisonReport {
    std::string instance_desc;
    double tolerance = kDefaultCompareTol;
    std::uint64_t seed = 0;
    std::vector<ComparisonEntry> entries;
    std::map<std::string, FormulaTally> summary;

    bool all_gating_passed() const;
    std::size_t gating_failures() const;

    // Canonical entry order (registry rank, then insertion order within a
    // formula) and summary tallies recomputed from the entries.
    void finalize();
};

std::vector<ComparisonEntry> compare_connection(const std::vector<ConnectionClaim>& claims,
                                                const MetricLieAlgebra& mla,
                                                const ConnectionCoefficients& oracle, double tol);

std::vector<ComparisonEntry> compare_curvature(const std::vector<CurvatureClaim>& claims,
                                               const MetricLieAlgebra& mla,
                                               const CurvatureTensor& oracle, double tol);

// Pairs each scalar claim with the oracle sectional / Ricci value on the same
// arguments. A degenerate plane marks the entry `error` instead of pass/fail.
std::vector<ComparisonEntry> compare_scalars(const std::vector<ScalarClaim>& claims,
                                             const MetricLieAlgebra& mla,
                                             const CurvatureTensor& curv, double tol);

using SuiteInput = std::variant<SpecialGroupSpec, OneDimCommutatorSpec>;

// Full verification run for one family instance: builds the base algebra and
// its lift, runs the oracle on both, checks the lifted-connection closed form
// against the lifted oracle (EQ4.*), the constant-curvature scan for the
// special family (G1.*), and every registry formula of the family.
ComparisonReport run_family_suite(const SuiteInput& input, std::uint64_t seed, double tol);

struct NamedFixture {
    std::string name;
    std::variant<SpecialGroupSpec, OneDimCommutatorSpec, MetricLieAlgebra> value;
};

const std::vector<NamedFixture>& fixtures();
const NamedFixture& fixture(const std::string& name);

// Dimension of the span of all basis brackets; used to explain why a generic
// input cannot be run through the family suites.
std::size_t commutator_dimension(const MetricLieAlgebra& mla);

std::string instance_description(const SuiteInput& input);

}  // namespace liegeo

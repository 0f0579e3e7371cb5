#pragma once

#include <span>
#include <variant>

#include "liegeo/harness.hpp"

namespace liegeo {

inline constexpr const char* kToolVersion = "0.1.0";

struct InputError : Error {
    using Error::Error;
};

struct ParsedInput {
    std::variant<SpecialGroupSpec, OneDimCommutatorSpec, MetricLieAlgebra> value;
    std::string source_desc;

    bool is_generic() const { return std::holds_alternative<MetricLieAlgebra>(value); }
};

// Parses and fully validates an input file (JSON). Throws InputError with a
// field path on syntax or schema problems, and with the violation list when a
// generic algebra fails validation or a family spec fails its invariants.
ParsedInput parse_spec_file(const std::string& path, double tol_jacobi = kDefaultJacobiTol);
ParsedInput parse_spec_text(const std::string& text, double tol_jacobi = kDefaultJacobiTol);

// Base algebra described by the input (builds family specs).
MetricLieAlgebra build_algebra(const ParsedInput& input);

// Serializes an algebra as a generic input file (sparse i<j triplets), so
// `lift` output can be fed back into any command.
std::string generic_input_json(const MetricLieAlgebra& mla);

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);  // throws InputError

// %.17g. All numeric output funnels through this so that JSON, CSV and text
// renderings carry the same digits and identical invocations produce
// identical bytes.
std::string format_double(double v);

struct RenderMeta {
    std::string invocation;
};

std::string render_report(const ComparisonReport& report, OutputFormat format, const RenderMeta& meta);
std::string render_reports(const std::vector<ComparisonReport>& reports, OutputFormat format,
                           const RenderMeta& meta);

std::string render_describe(const MetricLieAlgebra& mla, const ValidationResult& vr,
                            const std::string& source, OutputFormat format);
std::string render_connection(const MetricLieAlgebra& mla, const ConnectionCoefficients& conn,
                              OutputFormat format);
std::string render_curvature(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                             OutputFormat format);
std::string render_sectional_table(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                                   OutputFormat format);
std::string render_ricci_table(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                               OutputFormat format);

}  // namespace liegeo

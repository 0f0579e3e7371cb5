#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liegeo/io.hpp"

using namespace liegeo;

namespace {

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + path);
    out << content;
}

std::string join_invocation(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"left-invariant Riemannian geometry of metric Lie algebras and their tangent lifts"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string output_path;
    double tol = kDefaultCompareTol;
    double jacobi_tol = kDefaultJacobiTol;
    std::uint64_t seed = 0;
    app.add_option("--format", format_name, "output format: text, json or csv")->capture_default_str();
    app.add_option("--output", output_path, "write output to this file instead of stdout");
    app.add_option("--tol", tol, "comparison tolerance (absolute, max-norm)")->capture_default_str();
    app.add_option("--jacobi-tol", jacobi_tol, "Jacobi validation tolerance (relative to max |c|)")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for all sampled planes and directions")->capture_default_str();

    std::string spec_path;
    std::string lift_out;
    bool want_sectional = false, want_ricci = false, all_fixtures = false;

    auto* describe = app.add_subcommand("describe", "dimension, labels and validation verdict");
    describe->add_option("spec", spec_path, "input spec file")->required();

    auto* connection = app.add_subcommand("connection", "Levi-Civita connection table");
    connection->add_option("spec", spec_path, "input spec file")->required();

    auto* curvature = app.add_subcommand("curvature", "curvature tensor, sectional or Ricci tables");
    curvature->add_option("spec", spec_path, "input spec file")->required();
    auto* sect_flag = curvature->add_flag("--sectional", want_sectional, "basis-plane sectional curvatures");
    curvature->add_flag("--ricci", want_ricci, "Ricci tensor on the basis")->excludes(sect_flag);

    auto* lift_cmd = app.add_subcommand("lift", "write the tangent-lift algebra as a generic input file");
    lift_cmd->add_option("spec", spec_path, "input spec file")->required();
    lift_cmd->add_option("--out", lift_out, "path for the lifted input file");

    auto* verify = app.add_subcommand("verify", "compare every closed-form claim against the oracle");
    verify->add_option("spec", spec_path, "family input spec file");
    verify->add_flag("--all-fixtures", all_fixtures, "run the suite over every built-in fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const RenderMeta meta{join_invocation(argc, argv)};

    try {
        const OutputFormat format = parse_format(format_name);

        if (describe->parsed()) {
            const ParsedInput parsed = parse_spec_file(spec_path, jacobi_tol);
            const MetricLieAlgebra mla = build_algebra(parsed);
            write_output(render_describe(mla, validate(mla, jacobi_tol), parsed.source_desc, format),
                         output_path);
            return 0;
        }
        if (connection->parsed()) {
            const MetricLieAlgebra mla = build_algebra(parse_spec_file(spec_path, jacobi_tol));
            write_output(render_connection(mla, levi_civita(mla), format), output_path);
            return 0;
        }
        if (curvature->parsed()) {
            const MetricLieAlgebra mla = build_algebra(parse_spec_file(spec_path, jacobi_tol));
            const ConnectionCoefficients conn = levi_civita(mla);
            const CurvatureTensor curv = riemann(mla, conn);
            std::string out;
            if (want_sectional)
                out = render_sectional_table(mla, curv, format);
            else if (want_ricci)
                out = render_ricci_table(mla, curv, format);
            else
                out = render_curvature(mla, curv, format);
            write_output(out, output_path);
            return 0;
        }
        if (lift_cmd->parsed()) {
            const MetricLieAlgebra mla = build_algebra(parse_spec_file(spec_path, jacobi_tol));
            const std::string content = generic_input_json(tangent_lift(mla));
            write_output(content, lift_out.empty() ? output_path : lift_out);
            return 0;
        }
        if (verify->parsed()) {
            if (all_fixtures) {
                if (!spec_path.empty())
                    throw InputError("verify --all-fixtures does not take a spec file");
                std::vector<ComparisonReport> reports;
                bool all_passed = true;
                for (const NamedFixture& f : fixtures()) {
                    SuiteInput input;
                    if (const auto* sp = std::get_if<SpecialGroupSpec>(&f.value))
                        input = *sp;
                    else if (const auto* g2 = std::get_if<OneDimCommutatorSpec>(&f.value))
                        input = *g2;
                    else
                        continue;  // generic fixtures have no family suite
                    reports.push_back(run_family_suite(input, seed, tol));
                    reports.back().instance_desc += " [" + f.name + "]";
                    all_passed = all_passed && reports.back().all_gating_passed();
                }
                write_output(render_reports(reports, format, meta), output_path);
                return all_passed ? 0 : 1;
            }
            if (spec_path.empty()) throw InputError("verify needs a spec file or --all-fixtures");
            const ParsedInput parsed = parse_spec_file(spec_path, jacobi_tol);
            if (parsed.is_generic()) {
                const auto& mla = std::get<MetricLieAlgebra>(parsed.value);
                throw InputError(
                    "verify requires a family input: neither family's hypotheses are established for "
                    "a generic algebra (no designated b with [b,x]=x; commutator dimension " +
                    std::to_string(commutator_dimension(mla)) + ")");
            }
            SuiteInput input;
            if (const auto* sp = std::get_if<SpecialGroupSpec>(&parsed.value))
                input = *sp;
            else
                input = std::get<OneDimCommutatorSpec>(parsed.value);
            const ComparisonReport report = run_family_suite(input, seed, tol);
            write_output(render_report(report, format, meta), output_path);
            return report.all_gating_passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "liegeo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liegeo {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw InputError("unknown output format '" + name + "' (expected text, json or csv)");
}

namespace {

std::string js_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string join_values(const std::vector<double>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += format_double(v[i]);
    }
    return out;
}

std::string value_json(const ComparisonEntry& e, const std::vector<double>& v) {
    if (e.scalar && v.size() == 1) return format_double(v[0]);
    if (v.empty()) return "null";
    return "[" + join_values(v, ", ") + "]";
}

std::string value_text(const ComparisonEntry& e, const std::vector<double>& v) {
    if (e.scalar && v.size() == 1) return format_double(v[0]);
    if (v.empty()) return "-";
    return "[" + join_values(v, ", ") + "]";
}

// --- input parsing -------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

const json& require_key(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) fail(path, "missing required key \"" + key + "\"");
    return j.at(key);
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) {
                ok = true;
                break;
            }
        if (!ok) fail(path, "unexpected key \"" + key + "\"");
    }
}

std::size_t get_dim(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 1) fail(path, "expected a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Vec get_vector(const json& j, const std::string& path, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        fail(path, "expected an array of length " + std::to_string(n));
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = get_number(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Mat get_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        fail(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " array");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Vec row = get_vector(j[i], path + "[" + std::to_string(i) + "]", cols);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
    }
    return m;
}

ParsedInput parse_family(const json& j, const std::string& src) {
    const std::string family = require_key(j, "$", "family").get<std::string>();
    if (family == "special") {
        check_keys(j, "$", {"family", "n", "lambda", "u_metric"});
        SpecialGroupSpec spec;
        spec.n = get_dim(require_key(j, "$", "n"), "$.n");
        spec.lambda = get_number(require_key(j, "$", "lambda"), "$.lambda");
        if (j.contains("u_metric")) spec.u_metric = get_matrix(j.at("u_metric"), "$.u_metric", spec.n, spec.n);
        build_special(spec);  // surfaces invariant violations now
        return {std::move(spec), src};
    }
    if (family == "one_dim_commutator") {
        check_keys(j, "$", {"family", "n", "a", "f"});
        OneDimCommutatorSpec spec;
        spec.n = get_dim(require_key(j, "$", "n"), "$.n");
        spec.a = get_vector(require_key(j, "$", "a"), "$.a", spec.n);
        spec.f = get_matrix(require_key(j, "$", "f"), "$.f", spec.n, spec.n);
        build_one_dim_commutator(spec);
        return {std::move(spec), src};
    }
    fail("$.family", "unknown family \"" + family + "\" (expected special or one_dim_commutator)");
}

ParsedInput parse_generic(const json& g, const std::string& src, double tol_jacobi) {
    check_keys(g, "$.generic", {"dimension", "structure_constants", "metric", "labels"});
    const std::size_t n = get_dim(require_key(g, "$.generic", "dimension"), "$.generic.dimension");

    const json& sc = require_key(g, "$.generic", "structure_constants");
    if (!sc.is_array()) fail("$.generic.structure_constants", "expected an array of {i,j,k,value}");
    std::vector<Triplet> triplets;
    for (std::size_t t = 0; t < sc.size(); ++t) {
        const std::string path = "$.generic.structure_constants[" + std::to_string(t) + "]";
        const json& item = sc[t];
        if (!item.is_object()) fail(path, "expected an object {i,j,k,value}");
        check_keys(item, path, {"i", "j", "k", "value"});
        const auto geti = [&](const char* key) {
            const json& v = require_key(item, path, key);
            if (!v.is_number_integer() || v.get<long long>() < 0)
                fail(path + "." + key, "expected a non-negative integer");
            const auto idx = static_cast<std::size_t>(v.get<long long>());
            if (idx >= n) fail(path + "." + key, "index out of range for dimension " + std::to_string(n));
            return idx;
        };
        Triplet trip{geti("i"), geti("j"), geti("k"),
                     get_number(require_key(item, path, "value"), path + ".value")};
        if (trip.i >= trip.j) fail(path, "triplets must have i < j (the reflected entry is implied)");
        triplets.push_back(trip);
    }

    const Mat metric = get_matrix(require_key(g, "$.generic", "metric"), "$.generic.metric", n, n);

    std::vector<std::string> labels;
    if (g.contains("labels")) {
        const json& lj = g.at("labels");
        if (!lj.is_array() || lj.size() != n)
            fail("$.generic.labels", "expected an array of " + std::to_string(n) + " strings");
        for (std::size_t i = 0; i < n; ++i) {
            if (!lj[i].is_string()) fail("$.generic.labels[" + std::to_string(i) + "]", "expected a string");
            labels.push_back(lj[i].get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    }

    StructureConstants constants = StructureConstants::from_triplets(n, triplets);
    const ValidationResult vr = validate(n, constants.coefficients(), metric, tol_jacobi);
    if (!vr.ok()) throw InputError("input algebra failed validation: " + vr.describe());

    return {MetricLieAlgebra(std::move(constants), InnerProduct(metric), std::move(labels),
                             Provenance::generic()),
            src};
}

}  // namespace

ParsedInput parse_spec_text(const std::string& text, double tol_jacobi) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON syntax error: ") + e.what());
    }
    if (!j.is_object()) throw InputError("$: expected a JSON object");
    try {
        if (j.contains("family")) return parse_family(j, "(inline)");
        if (j.contains("generic")) return parse_generic(j.at("generic"), "(inline)", tol_jacobi);
    } catch (const SpecError& e) {
        throw InputError(e.what());
    }
    throw InputError("$: expected either a \"family\" spec or a \"generic\" algebra");
}

ParsedInput parse_spec_file(const std::string& path, double tol_jacobi) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ParsedInput parsed = parse_spec_text(buf.str(), tol_jacobi);
    parsed.source_desc = path;
    return parsed;
}

MetricLieAlgebra build_algebra(const ParsedInput& input) {
    if (const auto* sp = std::get_if<SpecialGroupSpec>(&input.value)) return build_special(*sp);
    if (const auto* g2 = std::get_if<OneDimCommutatorSpec>(&input.value))
        return build_one_dim_commutator(*g2);
    return std::get<MetricLieAlgebra>(input.value);
}

std::string generic_input_json(const MetricLieAlgebra& mla) {
    const std::size_t n = mla.dim();
    const Tensor3& c = mla.structure().coefficients();
    std::ostringstream os;
    os << "{\n  \"generic\": {\n    \"dimension\": " << n << ",\n    \"structure_constants\": [";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (c(i, j, k) != 0.0) {
                    os << (first ? "" : ",") << "\n      {\"i\": " << i << ", \"j\": " << j
                       << ", \"k\": " << k << ", \"value\": " << format_double(c(i, j, k)) << "}";
                    first = false;
                }
    os << (first ? "" : "\n    ") << "],\n    \"metric\": [";
    const Mat& g = mla.metric().matrix();
    for (std::size_t i = 0; i < n; ++i) {
        os << (i ? "," : "") << "\n      [";
        for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << format_double(g(i, j));
        os << "]";
    }
    os << "\n    ],\n    \"labels\": [";
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << "\"" << js_escape(mla.labels()[i]) << "\"";
    os << "]\n  }\n}\n";
    return os.str();
}

// --- report rendering ----------------------------------------------------

namespace {

void report_json_body(std::ostringstream& os, const ComparisonReport& r, const std::string& indent) {
    os << indent << "\"instance\": \"" << js_escape(r.instance_desc) << "\",\n";
    os << indent << "\"tolerance\": " << format_double(r.tolerance) << ",\n";
    os << indent << "\"seed\": " << r.seed << ",\n";
    os << indent << "\"entries\": [";
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        const ComparisonEntry& e = r.entries[i];
        os << (i ? "," : "") << "\n" << indent << "  {\"formula_id\": \"" << js_escape(e.formula_id)
           << "\", \"argument_desc\": \"" << js_escape(e.argument_desc)
           << "\", \"claimed\": " << value_json(e, e.claimed) << ", \"oracle\": " << value_json(e, e.oracle)
           << ", \"abs_diff\": " << (e.status == Status::error ? "null" : format_double(e.abs_diff))
           << ", \"status\": \"" << to_string(e.status) << "\", \"gating\": "
           << (e.gating ? "true" : "false") << "}";
    }
    os << (r.entries.empty() ? "" : ("\n" + indent)) << "],\n";
    os << indent << "\"summary\": {\"per_formula\": {";
    bool first = true;
    for (const auto& [id, tally] : r.summary) {
        os << (first ? "" : ",") << "\n" << indent << "  \"" << js_escape(id) << "\": {\"pass\": "
           << tally.pass << ", \"fail\": " << tally.fail << "}";
        first = false;
    }
    os << (r.summary.empty() ? "" : ("\n" + indent)) << "}}";
}

void report_text(std::ostringstream& os, const ComparisonReport& r) {
    os << "instance: " << r.instance_desc << "\n";
    os << "tolerance: " << format_double(r.tolerance) << "\n";
    os << "seed: " << r.seed << "\n";
    for (const ComparisonEntry& e : r.entries) {
        os << "  " << e.formula_id << "  " << e.argument_desc << "  claimed=" << value_text(e, e.claimed)
           << "  oracle=" << value_text(e, e.oracle) << "  |diff|="
           << (e.status == Status::error ? "-" : format_double(e.abs_diff)) << "  "
           << to_string(e.status);
        if (!e.gating) os << " (report-only)";
        os << "\n";
    }
    os << "summary:\n";
    for (const auto& [id, tally] : r.summary) {
        os << "  " << id << ": pass=" << tally.pass << " fail=" << tally.fail;
        if (tally.error) os << " error=" << tally.error;
        os << "\n";
    }
    os << "gating failures: " << r.gating_failures() << "\n";
}

void report_csv_rows(std::ostringstream& os, const ComparisonReport& r) {
    for (const ComparisonEntry& e : r.entries) {
        os << csv_quote(r.instance_desc) << "," << csv_quote(e.formula_id) << ","
           << csv_quote(e.argument_desc) << "," << csv_quote(join_values(e.claimed, ";")) << ","
           << csv_quote(join_values(e.oracle, ";")) << ","
           << (e.status == Status::error ? "" : format_double(e.abs_diff)) << "," << to_string(e.status)
           << "," << (e.gating ? "true" : "false") << "\n";
    }
}

constexpr const char* kCsvHeader =
    "instance,formula_id,argument_desc,claimed,oracle,abs_diff,status,gating\n";

}  // namespace

std::string render_report(const ComparisonReport& report, OutputFormat format, const RenderMeta& meta) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::text:
            os << "tool: liegeo " << kToolVersion << "\n";
            os << "invocation: " << meta.invocation << "\n";
            report_text(os, report);
            break;
        case OutputFormat::json:
            os << "{\n  \"tool_version\": \"" << kToolVersion << "\",\n  \"invocation\": \""
               << js_escape(meta.invocation) << "\",\n";
            report_json_body(os, report, "  ");
            os << "\n}\n";
            break;
        case OutputFormat::csv:
            os << kCsvHeader;
            report_csv_rows(os, report);
            break;
    }
    return os.str();
}

std::string render_reports(const std::vector<ComparisonReport>& reports, OutputFormat format,
                           const RenderMeta& meta) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::text:
            os << "tool: liegeo " << kToolVersion << "\n";
            os << "invocation: " << meta.invocation << "\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i) os << "\n";
                report_text(os, reports[i]);
            }
            break;
        case OutputFormat::json: {
            os << "{\n  \"tool_version\": \"" << kToolVersion << "\",\n  \"invocation\": \""
               << js_escape(meta.invocation) << "\",\n  \"reports\": [";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                os << (i ? "," : "") << "\n    {\n";
                std::ostringstream body;
                report_json_body(body, reports[i], "      ");
                os << body.str() << "\n    }";
            }
            os << "\n  ]\n}\n";
            break;
        }
        case OutputFormat::csv:
            os << kCsvHeader;
            for (const auto& r : reports) report_csv_rows(os, r);
            break;
    }
    return os.str();
}

// --- table rendering for the inspection commands -------------------------

std::string render_describe(const MetricLieAlgebra& mla, const ValidationResult& vr,
                            const std::string& source, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::text) {
        os << "source: " << source << "\n";
        os << "provenance: " << mla.provenance().detail << "\n";
        os << "dimension: " << mla.dim() << "\n";
        os << "labels: ";
        for (std::size_t i = 0; i < mla.dim(); ++i) os << (i ? ", " : "") << mla.labels()[i];
        os << "\n";
        os << "validation: " << vr.describe() << "\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        os << "{\n  \"source\": \"" << js_escape(source) << "\",\n  \"provenance\": \""
           << js_escape(mla.provenance().detail) << "\",\n  \"dimension\": " << mla.dim()
           << ",\n  \"labels\": [";
        for (std::size_t i = 0; i < mla.dim(); ++i)
            os << (i ? ", " : "") << "\"" << js_escape(mla.labels()[i]) << "\"";
        os << "],\n  \"validation\": {\"ok\": " << (vr.ok() ? "true" : "false") << ", \"violations\": [";
        for (std::size_t i = 0; i < vr.violations.size(); ++i)
            os << (i ? ", " : "") << "\"" << js_escape(vr.violations[i].describe()) << "\"";
        os << "]}\n}\n";
        return os.str();
    }
    throw InputError("csv output is only available for verify reports");
}

std::string render_connection(const MetricLieAlgebra& mla, const ConnectionCoefficients& conn,
                              OutputFormat format) {
    std::ostringstream os;
    const std::size_t n = mla.dim();
    if (format == OutputFormat::text) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                os << "D[" << mla.labels()[i] << "] " << mla.labels()[j] << " = ["
                   << join_values(conn.apply_basis(i, j), ", ") << "]\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        os << "{\n  \"dimension\": " << n << ",\n  \"labels\": [";
        for (std::size_t i = 0; i < n; ++i)
            os << (i ? ", " : "") << "\"" << js_escape(mla.labels()[i]) << "\"";
        os << "],\n  \"gamma\": [";
        for (std::size_t i = 0; i < n; ++i) {
            os << (i ? "," : "") << "\n    [";
            for (std::size_t j = 0; j < n; ++j)
                os << (j ? ", " : "") << "[" << join_values(conn.apply_basis(i, j), ", ") << "]";
            os << "]";
        }
        os << "\n  ]\n}\n";
        return os.str();
    }
    throw InputError("csv output is only available for verify reports");
}

std::string render_curvature(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                             OutputFormat format) {
    const std::size_t n = mla.dim();
    std::ostringstream os;
    struct Entry {
        std::size_t i, j, k;
        Vec value;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = curv.apply_basis(i, j, k);
                if (max_abs(v) > 1e-13) entries.push_back({i, j, k, std::move(v)});
            }
    if (format == OutputFormat::text) {
        for (const Entry& e : entries)
            os << "R(" << mla.labels()[e.i] << "," << mla.labels()[e.j] << ") " << mla.labels()[e.k]
               << " = [" << join_values(e.value, ", ") << "]\n";
        if (entries.empty()) os << "(flat: all curvature components vanish)\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        os << "{\n  \"dimension\": " << n << ",\n  \"entries\": [";
        for (std::size_t t = 0; t < entries.size(); ++t) {
            const Entry& e = entries[t];
            os << (t ? "," : "") << "\n    {\"i\": " << e.i << ", \"j\": " << e.j << ", \"k\": " << e.k
               << ", \"value\": [" << join_values(e.value, ", ") << "]}";
        }
        os << "\n  ]\n}\n";
        return os.str();
    }
    throw InputError("csv output is only available for verify reports");
}

std::string render_sectional_table(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                                   OutputFormat format) {
    const std::size_t n = mla.dim();
    std::ostringstream os;
    if (format == OutputFormat::text) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                os << "K(" << mla.labels()[i] << "," << mla.labels()[j] << ") = "
                   << format_double(sectional(mla, curv, basis_vector(n, i), basis_vector(n, j))) << "\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        os << "{\n  \"planes\": [";
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                os << (first ? "" : ",") << "\n    {\"i\": " << i << ", \"j\": " << j << ", \"value\": "
                   << format_double(sectional(mla, curv, basis_vector(n, i), basis_vector(n, j))) << "}";
                first = false;
            }
        os << "\n  ]\n}\n";
        return os.str();
    }
    throw InputError("csv output is only available for verify reports");
}

std::string render_ricci_table(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                               OutputFormat format) {
    const std::size_t n = mla.dim();
    Mat ric(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ric(i, j) = ricci(mla, curv, basis_vector(n, i), basis_vector(n, j));
    std::ostringstream os;
    if (format == OutputFormat::text) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                os << "Ric(" << mla.labels()[i] << "," << mla.labels()[j] << ") = "
                   << format_double(ric(i, j)) << "\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        os << "{\n  \"ricci\": [";
        for (std::size_t i = 0; i < n; ++i) {
            os << (i ? "," : "") << "\n    [";
            for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << format_double(ric(i, j));
            os << "]";
        }
        os << "\n  ]\n}\n";
        return os.str();
    }
    throw InputError("csv output is only available for verify reports");
}

}  // namespace liegeo

// Writes the frozen reference reports under tests/golden/. Run once from the
// repository root after any deliberate change to the suite contents, then
// commit the regenerated files.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "liegeo/io.hpp"

using namespace liegeo;

int main(int argc, char** argv) {
    const std::string out_dir = argc > 1 ? argv[1] : "tests/golden";
    std::filesystem::create_directories(out_dir);

    for (const NamedFixture& f : fixtures()) {
        SuiteInput input;
        if (const auto* sp = std::get_if<SpecialGroupSpec>(&f.value))
            input = *sp;
        else if (const auto* g2 = std::get_if<OneDimCommutatorSpec>(&f.value))
            input = *g2;
        else
            continue;
        const ComparisonReport report = run_family_suite(input, 0, kDefaultCompareTol);
        const std::string path = out_dir + "/" + f.name + ".json";
        std::ofstream out(path, std::ios::binary);
        out << render_report(report, OutputFormat::json, RenderMeta{"golden_gen"});
        std::cout << path << ": " << report.entries.size() << " entries, " << report.gating_failures()
                  << " gating failures\n";
    }
    return 0;
}

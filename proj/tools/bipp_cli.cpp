#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <bipp/bipp.hpp>

namespace {

bipp::SpecFile read_spec(const std::string& path, const std::string& field_override) {
    std::ifstream in(path);
    if (!in)
        throw bipp::invalid_parameter("cannot open spec file " + path);
    bipp::SpecFile sf = bipp::parse_specfile(in);
    if (!field_override.empty())
        sf.field = field_override;
    return sf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bilinear permutation families over GF(2^n): construct, invert, verify"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string field_override;
    std::string check = "";
    unsigned max_n = bipp::kEnumerationBound;
    std::string export_format = "hex";
    std::string out_dir = ".";

    CLI::App* construct = app.add_subcommand(
        "construct", "load a spec, validate every hypothesis, report the parameters");
    construct->add_option("--spec", spec_path, "spec file")->required();
    construct->add_option("--field", field_override,
                          "override the field line (gf2:N[:modhex[:m]])");

    CLI::App* verify = app.add_subcommand(
        "verify", "certify inverse formulas against exhaustive enumeration");
    verify->add_option("--spec", spec_path, "spec file")->required();
    verify->add_option("--field", field_override,
                       "override the field line (gf2:N[:modhex[:m]])");
    verify->add_option("--check", check,
                       "which checks to run: roundtrip, agreement, lemmas, all");
    verify->add_option("--max-n", max_n, "refuse enumeration beyond this extension degree");

    CLI::App* do_export = app.add_subcommand(
        "export", "write forward/inverse value tables (and dense coefficients when small)");
    do_export->add_option("--spec", spec_path, "spec file")->required();
    do_export->add_option("--field", field_override,
                          "override the field line (gf2:N[:modhex[:m]])");
    do_export->add_option("--export", export_format, "table format: hex or bin");
    do_export->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        const bipp::SpecFile sf = read_spec(spec_path, field_override);
        if (construct->parsed())
            return bipp::cmd_construct(sf, std::cout);
        if (verify->parsed()) {
            // Priority: explicit flag, then the spec's own checks line, then all.
            std::string effective = check;
            if (effective.empty())
                effective = sf.checks.empty() ? "all" : sf.checks.front();
            if (sf.checks.size() > 1 && check.empty()) {
                int worst = bipp::kExitOk;
                for (const std::string& c : sf.checks)
                    worst = std::max(worst, bipp::cmd_verify(sf, std::cout, c, max_n));
                return worst;
            }
            return bipp::cmd_verify(sf, std::cout, effective, max_n);
        }
        return bipp::cmd_export(sf, export_format, out_dir, std::cout);
    } catch (const bipp::error& e) {
        std::cout << "error: " << e.what() << "\n";
        return bipp::exit_code_for(e);
    }
}

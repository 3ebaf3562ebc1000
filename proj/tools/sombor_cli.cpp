// sombor: build polymer graphs, compute their Sombor index exactly, and run
// the verification campaigns.
//
//   sombor generate --family spiro:q=6,h=2,k=8 --out s.el
//   sombor compute --in s.el [--json]
//   sombor census --in s.el
//   sombor verify families [--grid default|FILE] [--report FILE]
//   sombor verify bounds --seed 42 --count 1000 --op chain [--report FILE]
//
// Exit status: 0 success, 1 verification failures, 2 usage or input errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sombor/edge_list.hpp"
#include "sombor/families.hpp"
#include "sombor/harness.hpp"
#include "sombor/index.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit_report(const sombor::VerificationReport& report, const std::string& path) {
    if (path.empty() || path == "-") {
        report.write_json_lines(std::cout);
        report.write_summary(std::cerr);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sombor::Error(sombor::ErrorKind::NotFound, "cannot write " + path);
    report.write_json_lines(out);
    report.write_summary(std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace sombor;

    CLI::App app{"Sombor index of polymer graphs"};
    app.require_subcommand(1);

    std::string family;
    std::string out_path;
    auto* generate_cmd = app.add_subcommand("generate", "Write the edge list of a named family member");
    generate_cmd->add_option("--family", family, "e.g. q:m=5,n=4 or spiro:q=6,h=2,k=8")->required();
    generate_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    std::string in_path;
    bool as_json = false;
    auto* compute_cmd = app.add_subcommand("compute", "Exact Sombor index of an edge-list graph");
    compute_cmd->add_option("--in", in_path, "Edge-list file")->required();
    compute_cmd->add_flag("--json", as_json, "Print the value as JSON");

    auto* census_cmd = app.add_subcommand("census", "Endpoint-degree census of an edge-list graph");
    census_cmd->add_option("--in", in_path, "Edge-list file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
    verify_cmd->require_subcommand(1);

    std::string grid = "default";
    std::string report_path;
    auto* families_cmd = verify_cmd->add_subcommand("families", "Closed forms and censuses over a grid");
    families_cmd->add_option("--grid", grid, "`default` or a file with one family spec per line");
    families_cmd->add_option("--report", report_path, "JSON-lines report file (default: stdout)");

    std::uint64_t seed = 42;
    std::uint64_t count = 1000;
    std::string op_name = "all";
    std::uint32_t min_units = 2;
    std::uint32_t max_units = 6;
    auto* bounds_cmd = verify_cmd->add_subcommand("bounds", "Inequality checks on seeded random polymers");
    bounds_cmd->add_option("--seed", seed, "PRNG seed");
    bounds_cmd->add_option("--count", count, "Instances per operator");
    bounds_cmd->add_option("--op", op_name, "link|chain|circuit|bouquet|all")
        ->check(CLI::IsMember({"link", "chain", "circuit", "bouquet", "all"}));
    bounds_cmd->add_option("--min-units", min_units, "Fewest units per instance");
    bounds_cmd->add_option("--max-units", max_units, "Most units per instance");
    bounds_cmd->add_option("--report", report_path, "JSON-lines report file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (*generate_cmd) {
            const auto assembly = generate(parse_family_spec(family));
            if (out_path.empty() || out_path == "-") {
                write_edge_list(std::cout, assembly.graph);
            } else {
                write_edge_list_file(out_path, assembly.graph);
            }
            return 0;
        }
        if (*compute_cmd) {
            const auto so = sombor_index(read_edge_list_file(in_path));
            if (as_json) {
                std::cout << to_json(so).dump() << '\n';
            } else {
                std::cout << so.to_string() << " ≈ " << std::setprecision(12) << so.to_double() << '\n';
            }
            return 0;
        }
        if (*census_cmd) {
            const auto g = read_edge_list_file(in_path);
            std::cout << edge_census(g).to_string() << '\n';
            return 0;
        }
        if (*families_cmd) {
            std::vector<FamilySpec> specs;
            if (grid == "default") {
                specs = default_family_grid();
            } else {
                std::ifstream in(grid);
                if (!in) throw Error(ErrorKind::NotFound, "cannot open grid file " + grid);
                specs = read_family_grid(in);
            }
            const auto report = verify_families(specs);
            emit_report(report, report_path);
            return report.has_failures() ? kExitVerifyFailed : 0;
        }
        if (*bounds_cmd) {
            VerificationReport report;
            std::vector<Operator> ops;
            if (op_name == "all") {
                ops = {Operator::Link, Operator::Chain, Operator::Circuit, Operator::Bouquet};
            } else {
                ops = {parse_operator(op_name)};
            }
            for (auto op : ops) {
                report.append(verify_bounds({seed, op, min_units, max_units}, count));
            }
            emit_report(report, report_path);
            return report.has_failures() ? kExitVerifyFailed : 0;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

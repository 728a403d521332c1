// Command-line front end: analyze, verify, census, generate.
//
// Exit codes: 0 pass, 1 identity failure (or a conjecture FINDING under
// --strict), 2 input error, 3 request not applicable to the input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cdkit/cdkit.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_failure = 1;
constexpr int exit_input = 2;
constexpr int exit_inapplicable = 3;

int exit_code_for(cdkit::ErrorCode code)
{
    switch (code) {
    case cdkit::ErrorCode::not_a_sphere:
    case cdkit::ErrorCode::wrong_parity:
    case cdkit::ErrorCode::not_divisible:
    case cdkit::ErrorCode::not_palindromic:
        return exit_inapplicable;
    default:
        return exit_input;
    }
}

/// "gen:EXPR" builds from a generator expression; anything else is a complex file.
cdkit::SimplicialComplex load(const std::string& source)
{
    if (source.rfind("gen:", 0) == 0) {
        return cdkit::generate(source.substr(4));
    }
    return cdkit::read_complex(source);
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw cdkit::Error(cdkit::ErrorCode::parse_error, "cannot write '" + out_path + "'");
    }
    out << text;
}

unsigned worker_count()
{
    if (const char* env = std::getenv("CDKIT_WORKERS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) {
                return static_cast<unsigned>(n);
            }
        } catch (const std::exception&) {
        }
        throw cdkit::Error(cdkit::ErrorCode::parse_error, "CDKIT_WORKERS must be a positive integer");
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Face-enumeration invariants of simplicial complexes and exact identity checks"};
    app.require_subcommand(1);

    std::string source;
    std::string out_path;
    bool json = false;
    bool csv = false;
    bool strict = false;

    auto* analyze = app.add_subcommand("analyze", "Report f, h, h~, gamma, homology and theorem values");
    analyze->add_option("source", source, "complex file, or gen:EXPR")->required();
    analyze->add_flag("--json", json, "emit JSON");
    analyze->add_option("-o,--output", out_path, "write the report here instead of stdout");

    std::string suite_text = "all";
    auto* verify = app.add_subcommand("verify", "Check identities exactly; exit 0 iff all hold");
    verify->add_option("source", source, "complex file, or gen:EXPR")->required();
    verify->add_option("--suite", suite_text, "all, or a comma list of ds,theorem,links,gamma,joins");
    verify->add_flag("--json", json, "emit JSON");
    verify->add_flag("--strict", strict, "treat conjecture FINDINGs as failures");
    verify->add_option("-o,--output", out_path, "write the report here instead of stdout");

    std::size_t max_vertices = 0;
    std::optional<int> dim;
    bool force = false;
    bool dedup = false;
    auto* census = app.add_subcommand("census", "Exhaustive census of flag generalized homology spheres on labeled graphs");
    census->add_option("--max-vertices", max_vertices, "largest vertex count to enumerate")->required();
    census->add_option("--dim", dim, "keep only spheres of this dimension");
    auto* json_flag = census->add_flag("--json", json, "emit JSON");
    census->add_flag("--csv", csv, "emit CSV")->excludes(json_flag);
    census->add_flag("--force", force, "allow more than 7 vertices");
    census->add_flag("--dedup", dedup, "collapse isomorphic graphs, counting copies");
    census->add_flag("--strict", strict, "treat conjecture FINDINGs as failures");
    census->add_option("-o,--output", out_path, "write records here instead of stdout");

    std::string name;
    std::optional<std::size_t> n_param;
    std::optional<std::size_t> m_param;
    auto* generate = app.add_subcommand("generate", "Write a generated complex in canonical form");
    generate->add_option("name", name,
                         "icosahedron, two-points, cycle, cross-polytope, simplex-boundary, or an expression "
                         "such as 'suspension(cycle(10))'")
        ->required();
    auto* n_opt = generate->add_option("--n", n_param, "size parameter for cross-polytope / simplex-boundary");
    generate->add_option("--m", m_param, "size parameter for cycle")->excludes(n_opt);
    generate->add_option("-o,--output", out_path, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const auto L = load(source);
            const auto inv = cdkit::analyze(L);
            emit(json ? cdkit::to_json(inv).dump(2) + "\n" : cdkit::render_text(inv, source), out_path);
            return exit_pass;
        }
        if (*verify) {
            const auto L = load(source);
            bool is_all = false;
            const auto suites = cdkit::parse_suites(suite_text, is_all);
            cdkit::SphereCache cache;
            const auto report = cdkit::verify(L, source, suites, is_all, cache);
            emit(json ? cdkit::to_json(report).dump(2) + "\n" : cdkit::render_text(report), out_path);
            if (!report.all_pass() || (strict && report.has_finding())) {
                return exit_failure;
            }
            return exit_pass;
        }
        if (*census) {
            cdkit::CensusOptions options;
            options.max_vertices = max_vertices;
            options.dim = dim;
            options.force = force;
            options.dedup = dedup;
            options.workers = worker_count();
            const auto result = cdkit::run_census(options);
            emit(json  ? cdkit::census_to_json(result)
                 : csv ? cdkit::census_to_csv(result)
                       : cdkit::census_to_text(result),
                 out_path);
            for (const auto& r : result.records) {
                const bool ok = r.dehn_sommerville && r.link_derivative && r.theorem_equal.value_or(true);
                if (!ok || (strict && r.finding)) {
                    return exit_failure;
                }
            }
            return exit_pass;
        }
        if (*generate) {
            std::string expr = name;
            if (n_param) {
                expr += "(" + std::to_string(*n_param) + ")";
            } else if (m_param) {
                expr += "(" + std::to_string(*m_param) + ")";
            }
            emit(cdkit::serialize_complex(cdkit::generate(expr)), out_path);
            return exit_pass;
        }
    } catch (const cdkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return exit_input;
}

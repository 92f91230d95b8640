// linlay: construct, verify, and bound linear layouts of complete graphs.
//
// Exit codes: 0 success, 1 verification/bound failure, 2 usage or IO error.
// The environment variable LINLAY_SEED is reserved for future use; all
// algorithms are deterministic and ignore it.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "linlay/bounds.hpp"
#include "linlay/io.hpp"
#include "linlay/layout.hpp"
#include "linlay/page_builders.hpp"
#include "linlay/queue_builders.hpp"
#include "linlay/triangle.hpp"

namespace {

using namespace linlay;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Construction {
    Layout layout;
    std::vector<Chain> chains;  // triangle chains, queue kinds only
    std::map<std::string, std::string> metadata;
    int budget = -1;  // part-count or locality budget, -1 = none
    bool budget_is_locality = false;
};

Construction construct(const std::string& kind, int n) {
    Construction c;
    if (kind == "local-queue") {
        c.chains = n >= 2 ? build_recursive_chain_cover(n - 1) : std::vector<Chain>{};
        c.layout = build_local_queue_layout(n);
        c.budget = local_queue_budget(n);
        c.budget_is_locality = true;
        c.metadata["construction"] = "recursive-chain-cover";
    } else if (kind == "union-queue") {
        c.layout = build_union_queue_layout(n);
        c.budget = union_queue_budget(n);
        c.metadata["construction"] = "flat-chain-cover";
    } else if (kind == "local-page") {
        c.layout = build_local_page_layout(n);
        c.budget = static_cast<int>(n / 3.0 + 4.0);
        c.budget_is_locality = true;
        c.metadata["construction"] = "rotated-gadgets";
    } else if (kind == "union-page") {
        c.layout = build_union_page_layout(n);
        c.budget = static_cast<int>(4.0 * n / 9.0 + 18.0);
        c.metadata["construction"] = "rotated-gadgets";
    } else if (kind == "global-queue") {
        c.layout = elbow_queue_layout(n);
        if (n >= 2) c.chains = elbow_chains(n - 1);
        c.budget = n / 2;
        c.metadata["construction"] = "nested-elbows";
    } else if (kind == "global-page") {
        c.layout = zigzag_page_layout(n);
        c.budget = (n + 1) / 2;
        c.metadata["construction"] = "zigzag";
    } else {
        throw std::invalid_argument("unknown kind: " + kind);
    }
    c.metadata["parameters"] = "n=" + std::to_string(n);
    if (c.budget >= 0) c.metadata["bound_budget"] = std::to_string(c.budget);
    return c;
}

int report_verification(const Layout& layout, int expect_max_locality, int expect_max_parts) {
    VerificationReport report = verify_layout(layout);
    std::cout << "n: " << layout.n << "\n"
              << "kind: " << to_string(layout.kind) << " (" << to_string(layout.variant)
              << ")\n"
              << "parts: " << report.part_count << "\n"
              << "max locality: " << report.max_locality << "\n"
              << "all parts valid: " << (report.all_parts_valid ? "yes" : "no") << "\n"
              << "exact cover: " << (report.covered ? "yes" : "no") << "\n";
    bool ok = report.ok();
    if (expect_max_locality >= 0 && report.max_locality > expect_max_locality) {
        std::cout << "FAIL: max locality " << report.max_locality << " exceeds "
                  << expect_max_locality << "\n";
        ok = false;
    }
    if (expect_max_parts >= 0 && report.part_count > expect_max_parts) {
        std::cout << "FAIL: part count " << report.part_count << " exceeds " << expect_max_parts
                  << "\n";
        ok = false;
    }
    std::cout << (ok ? "OK" : "FAIL") << "\n";
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct-and-verify engine for linear layouts of complete graphs"};
    app.require_subcommand(1);

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build a layout of K_n");
    std::string kind;
    int n = 0;
    std::string out_file, svg_file;
    cmd_construct
        ->add_option("--kind", kind, "local-queue|union-queue|local-page|union-page|global-queue|global-page")
        ->required();
    cmd_construct->add_option("--n", n, "number of vertices")->required()->check(CLI::PositiveNumber);
    cmd_construct->add_option("--out", out_file, "write the layout document to FILE");
    cmd_construct->add_option("--svg", svg_file, "write a triangle-chain SVG (queue kinds only)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a layout document");
    std::string verify_file;
    int expect_max_locality = -1, expect_max_parts = -1;
    cmd_verify->add_option("file", verify_file, "layout document")->required();
    cmd_verify->add_option("--expect-max-locality", expect_max_locality, "fail if exceeded");
    cmd_verify->add_option("--expect-max-parts", expect_max_parts, "fail if exceeded");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "evaluate bound formulas for K_n");
    int bounds_n = 0;
    bool bounds_json = false;
    cmd_bounds->add_option("--n", bounds_n, "number of vertices")->required()->check(CLI::PositiveNumber);
    cmd_bounds->add_flag("--json", bounds_json, "emit JSON");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive exact value for tiny n");
    int oracle_n = 0, oracle_cap = 0;
    std::string oracle_parameter;
    cmd_oracle->add_option("--n", oracle_n, "number of vertices")->required()->check(CLI::PositiveNumber);
    cmd_oracle->add_option("--parameter", oracle_parameter, "lqn|lpn|uqn|upn")->required();
    cmd_oracle->add_option("--cap", oracle_cap, "override the search cap (opt-in, slow)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_construct->parsed()) {
            Construction c = construct(kind, n);
            if (!svg_file.empty() && c.chains.empty()) {
                std::cerr << "error: --svg is only available for triangle-based queue kinds\n";
                return kExitUsage;
            }
            VerificationReport report = verify_layout(c.layout);
            bool within_budget = true;
            if (c.budget >= 0)
                within_budget = (c.budget_is_locality ? report.max_locality : report.part_count)
                                <= c.budget;
            std::string doc = serialize_layout(c.layout, c.metadata);
            if (!out_file.empty()) write_file_atomic(out_file, doc);
            else std::cout << doc;
            if (!svg_file.empty())
                write_file_atomic(svg_file, render_triangle_svg(c.chains, c.layout.n - 1));
            std::cerr << "parts: " << report.part_count
                      << ", max locality: " << report.max_locality
                      << (c.budget >= 0 ? ", budget: " + std::to_string(c.budget) : "") << "\n";
            return report.ok() && within_budget ? kExitOk : kExitFailure;
        }
        if (cmd_verify->parsed()) {
            std::ifstream in(verify_file, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read " << verify_file << "\n";
                return kExitUsage;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            Layout layout = parse_layout(buffer.str());
            return report_verification(layout, expect_max_locality, expect_max_parts);
        }
        if (cmd_bounds->parsed()) {
            BoundTable t = evaluate_bounds(bounds_n);
            if (bounds_json) {
                std::cout << "{\n"
                          << "  \"n\": " << t.n << ",\n"
                          << "  \"lqn_lower_strict\": " << t.lqn_lower_strict << ",\n"
                          << "  \"lqn_lower\": " << t.lqn_lower << ",\n"
                          << "  \"lqn_upper\": " << t.lqn_upper << ",\n"
                          << "  \"uqn_upper\": " << t.uqn_upper << ",\n"
                          << "  \"lpn_lower_strict\": " << t.lpn_lower_strict << ",\n"
                          << "  \"lpn_lower\": " << t.lpn_lower << ",\n"
                          << "  \"lpn_upper\": " << t.lpn_upper << ",\n"
                          << "  \"upn_upper\": " << t.upn_upper << ",\n"
                          << "  \"qn\": " << t.qn << ",\n"
                          << "  \"pn\": " << t.pn << ",\n"
                          << "  \"density_lower\": " << t.density_lower << "\n"
                          << "}\n";
            } else {
                std::cout << "n = " << t.n << "\n"
                          << "lqn: > " << t.lqn_lower_strict << " (so >= " << t.lqn_lower
                          << "), <= " << t.lqn_upper << "\n"
                          << "uqn: <= " << t.uqn_upper << "\n"
                          << "lpn: > " << t.lpn_lower_strict << " (so >= " << t.lpn_lower
                          << "), <= " << t.lpn_upper << "\n"
                          << "upn: <= " << t.upn_upper << "\n"
                          << "qn = " << t.qn << ", pn = " << t.pn << "\n"
                          << "density lower bound: " << t.density_lower << "\n";
            }
            return kExitOk;
        }
        if (cmd_oracle->parsed()) {
            auto parameter = parse_parameter(oracle_parameter);
            if (!parameter) {
                std::cerr << "error: unknown parameter " << oracle_parameter << "\n";
                return kExitUsage;
            }
            ExactResult result = exact_number(oracle_n, *parameter, oracle_cap);
            std::cout << to_string(*parameter) << "(K_" << oracle_n << ") = " << result.value
                      << "  (nodes explored: " << result.nodes_explored << ")\n";
            std::cout << serialize_layout(result.witness,
                                          {{"construction", "exhaustive-search"},
                                           {"parameters", "n=" + std::to_string(oracle_n)}});
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

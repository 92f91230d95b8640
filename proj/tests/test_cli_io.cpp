#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "linlay/io.hpp"
#include "linlay/page_builders.hpp"
#include "linlay/queue_builders.hpp"

using namespace linlay;

namespace {

bool layouts_equal(const Layout& a, const Layout& b) {
    return serialize_layout(a) == serialize_layout(b);
}

bool throws_with_prefix(const std::string& text, const std::string& prefix) {
    try {
        parse_layout(text);
    } catch (const std::invalid_argument& err) {
        return std::string(err.what()).rfind(prefix, 0) == 0;
    }
    return false;
}

} // namespace

TEST_CASE("serialize K_3 queue layout") {
    Layout k3{3, LayoutKind::Queue, LayoutVariant::Plain,
              {{0, {Edge(2, 3), Edge(1, 2), Edge(1, 3)}}}};
    std::string doc = serialize_layout(k3);
    CHECK(doc ==
          "{\n"
          "  \"schema_version\": 1,\n"
          "  \"n\": 3,\n"
          "  \"kind\": \"queue\",\n"
          "  \"variant\": \"plain\",\n"
          "  \"parts\": [\n"
          "    {\n"
          "      \"id\": 0,\n"
          "      \"edges\": [\n"
          "        [\n"
          "          1,\n"
          "          2\n"
          "        ],\n"
          "        [\n"
          "          1,\n"
          "          3\n"
          "        ],\n"
          "        [\n"
          "          2,\n"
          "          3\n"
          "        ]\n"
          "      ]\n"
          "    }\n"
          "  ]\n"
          "}\n");
    // Canonical: repeated calls and permuted inputs give identical bytes.
    Layout permuted = k3;
    std::swap(permuted.parts[0].edges[0], permuted.parts[0].edges[2]);
    CHECK(serialize_layout(permuted) == doc);
    CHECK(serialize_layout(k3) == doc);
}

TEST_CASE("metadata appears sorted by key") {
    Layout k2{2, LayoutKind::Page, LayoutVariant::Union, {{0, {Edge(1, 2)}}}};
    std::string doc = serialize_layout(k2, {{"zeta", "1"}, {"alpha", "2"}});
    auto alpha = doc.find("\"alpha\""), zeta = doc.find("\"zeta\"");
    CHECK(alpha != std::string::npos);
    CHECK(zeta != std::string::npos);
    CHECK(alpha < zeta);
}

TEST_CASE("serialize/parse round trip on constructed layouts") {
    for (const Layout& layout : {build_local_queue_layout(14), build_union_queue_layout(60),
                                 build_local_page_layout(15), build_union_page_layout(54)}) {
        Layout back = parse_layout(serialize_layout(layout));
        CHECK(back.n == layout.n);
        CHECK(back.kind == layout.kind);
        CHECK(back.variant == layout.variant);
        CHECK(back.parts.size() == layout.parts.size());
        CHECK(layouts_equal(back, layout));
        CHECK(verify_layout(back).ok());
    }
    CHECK(build_union_page_layout(54).parts.size() == 28);
}

TEST_CASE("parse diagnostics are distinct") {
    CHECK(throws_with_prefix("not json", "schema violation: not valid JSON"));
    CHECK(throws_with_prefix("[]", "schema violation: document not an object"));
    CHECK(throws_with_prefix(R"({"n": 3})", "schema violation: missing key"));
    CHECK(throws_with_prefix(
        R"({"schema_version": 2, "n": 3, "kind": "queue", "variant": "plain", "parts": []})",
        "schema violation: unsupported schema_version"));
    CHECK(throws_with_prefix(
        R"({"schema_version": 1, "n": 0, "kind": "queue", "variant": "plain", "parts": []})",
        "schema violation: n must be a positive integer"));
    CHECK(throws_with_prefix(
        R"({"schema_version": 1, "n": 3, "kind": "stack", "variant": "plain", "parts": []})",
        "schema violation: kind"));
    CHECK(throws_with_prefix(
        R"({"schema_version": 1, "n": 3, "kind": "queue", "variant": "x", "parts": []})",
        "schema violation: variant"));
    CHECK(throws_with_prefix(
        R"({"schema_version": 1, "n": 3, "kind": "queue", "variant": "plain", "parts": [{}]})",
        "schema violation: malformed part"));
    CHECK(throws_with_prefix(R"({"schema_version": 1, "n": 3, "kind": "queue",
        "variant": "plain", "parts": [{"id": 0, "edges": [[1]]}]})",
                             "schema violation: malformed edge"));
    CHECK(throws_with_prefix(R"({"schema_version": 1, "n": 3, "kind": "queue",
        "variant": "plain", "parts": [{"id": 0, "edges": [[1, 4]]}]})",
                             "index out of range"));
    CHECK(throws_with_prefix(R"({"schema_version": 1, "n": 3, "kind": "queue", "variant": "plain",
        "parts": [{"id": 0, "edges": [[1, 2]]}, {"id": 1, "edges": [[2, 1]]}]})",
                             "edge covered twice"));
    CHECK(throws_with_prefix(R"({"schema_version": 1, "n": 3, "kind": "queue", "variant": "plain",
        "parts": [{"id": 0, "edges": []}, {"id": 0, "edges": []}]})",
                             "duplicate part id"));
}

TEST_CASE("triangle SVG rendering") {
    std::vector<Chain> one{{{1, 8}, {1, 1}, {3, 1}}};
    std::string svg = render_triangle_svg(one, 8, {"elbow 1"});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("elbow 1") != std::string::npos);
    CHECK(svg == render_triangle_svg(one, 8, {"elbow 1"}));  // deterministic

    // Default labels are numbered.
    auto chains = build_recursive_chain_cover(13);
    std::string cover = render_triangle_svg(chains, 13);
    CHECK(cover.find("chain 1") != std::string::npos);
    CHECK(cover.find("chain " + std::to_string(chains.size())) != std::string::npos);

    // Empty chain set still draws the grid.
    std::string grid = render_triangle_svg({}, 4);
    CHECK(grid.find("<rect") != std::string::npos);
    CHECK(grid.find("hsl(") == std::string::npos);
}

TEST_CASE("atomic file writing") {
    const std::string path = "test_cli_io_scratch.json";
    write_file_atomic(path, "hello\n");
    write_file_atomic(path, "world\n");  // overwrite via rename
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == "world\n");
    in.close();
    std::remove(path.c_str());
    std::remove((path + ".tmp").c_str());

    CHECK_THROWS_AS(write_file_atomic("no_such_dir/x.json", "x"), std::runtime_error);
}

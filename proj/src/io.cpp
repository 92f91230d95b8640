#include "linlay/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace linlay {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string kind_string(LayoutKind kind) {
    return kind == LayoutKind::Queue ? "queue" : "page";
}

std::string variant_string(LayoutVariant variant) {
    return variant == LayoutVariant::Plain ? "plain" : "union";
}

} // namespace

std::string serialize_layout(const Layout& layout,
                             const std::map<std::string, std::string>& metadata) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = layout.n;
    doc["kind"] = kind_string(layout.kind);
    doc["variant"] = variant_string(layout.variant);
    std::vector<Part> parts = layout.parts;
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.id < b.id; });
    doc["parts"] = json::array();
    for (const Part& part : parts) {
        std::vector<Edge> edges = part.edges;
        std::sort(edges.begin(), edges.end());
        json jpart;
        jpart["id"] = part.id;
        jpart["edges"] = json::array();
        for (const Edge& e : edges) jpart["edges"].push_back(json::array({e.a, e.b}));
        doc["parts"].push_back(std::move(jpart));
    }
    if (!metadata.empty()) {
        json meta;  // std::map iterates sorted by key
        for (const auto& [key, value] : metadata) meta[key] = value;
        doc["metadata"] = std::move(meta);
    }
    return doc.dump(2) + "\n";
}

Layout parse_layout(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("schema violation: not valid JSON: ") +
                                    err.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("schema violation: document not an object");
    for (const char* key : {"schema_version", "n", "kind", "variant", "parts"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("schema violation: missing key '") + key +
                                        "'");
    if (!doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != kSchemaVersion)
        throw std::invalid_argument("schema violation: unsupported schema_version");
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 1)
        throw std::invalid_argument("schema violation: n must be a positive integer");

    Layout layout;
    layout.n = doc["n"].get<int>();
    const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
    if (kind == "queue") layout.kind = LayoutKind::Queue;
    else if (kind == "page") layout.kind = LayoutKind::Page;
    else throw std::invalid_argument("schema violation: kind must be 'queue' or 'page'");
    const std::string variant =
        doc["variant"].is_string() ? doc["variant"].get<std::string>() : "";
    if (variant == "plain") layout.variant = LayoutVariant::Plain;
    else if (variant == "union") layout.variant = LayoutVariant::Union;
    else throw std::invalid_argument("schema violation: variant must be 'plain' or 'union'");
    if (!doc["parts"].is_array())
        throw std::invalid_argument("schema violation: parts must be an array");

    std::set<int> ids;
    std::set<Edge> seen;
    for (const auto& jpart : doc["parts"]) {
        if (!jpart.is_object() || !jpart.contains("id") || !jpart.contains("edges") ||
            !jpart["id"].is_number_integer() || !jpart["edges"].is_array())
            throw std::invalid_argument("schema violation: malformed part");
        Part part;
        part.id = jpart["id"].get<int>();
        if (!ids.insert(part.id).second) throw std::invalid_argument("duplicate part id");
        for (const auto& jedge : jpart["edges"]) {
            if (!jedge.is_array() || jedge.size() != 2 || !jedge[0].is_number_integer() ||
                !jedge[1].is_number_integer())
                throw std::invalid_argument("schema violation: malformed edge");
            int a = jedge[0].get<int>(), b = jedge[1].get<int>();
            if (a < 1 || b < 1 || a > layout.n || b > layout.n || a == b)
                throw std::invalid_argument("index out of range");
            Edge e(a, b);
            if (!seen.insert(e).second) throw std::invalid_argument("edge covered twice");
            part.edges.push_back(e);
        }
        std::sort(part.edges.begin(), part.edges.end());
        layout.parts.push_back(std::move(part));
    }
    return layout;
}

std::string render_triangle_svg(const std::vector<Chain>& chains, int n,
                                const std::vector<std::string>& labels) {
    constexpr int kCell = 20;
    constexpr int kMargin = 30;
    constexpr int kLegendRow = 18;
    // Deterministic palette: golden-angle hue steps.
    auto color = [](std::size_t i) {
        int hue = static_cast<int>((i * 137) % 360);
        std::ostringstream c;
        c << "hsl(" << hue << ",70%,60%)";
        return c.str();
    };

    const int grid_w = 2 * kMargin + n * kCell;
    const int grid_h = 2 * kMargin + n * kCell;
    const int legend_h = static_cast<int>(chains.size()) * kLegendRow + 10;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << grid_w
        << "\" height=\"" << grid_h + legend_h << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    auto cell_x = [&](int x) { return kMargin + (x - 1) * kCell; };
    auto cell_y = [&](int y) { return kMargin + (n - y) * kCell; };  // y grows upward

    // Bare grid of T_n cells.
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x + y <= n + 1; ++x)
            svg << "  <rect x=\"" << cell_x(x) << "\" y=\"" << cell_y(y) << "\" width=\"" << kCell
                << "\" height=\"" << kCell << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

    for (std::size_t c = 0; c < chains.size(); ++c) {
        const std::string fill = color(c);
        for (const auto& p : chains[c])
            svg << "  <rect x=\"" << cell_x(p.x) << "\" y=\"" << cell_y(p.y) << "\" width=\""
                << kCell << "\" height=\"" << kCell << "\" fill=\"" << fill
                << "\" stroke=\"#444444\"/>\n";
    }

    for (std::size_t c = 0; c < chains.size(); ++c) {
        const int ly = grid_h + 10 + static_cast<int>(c) * kLegendRow;
        std::string label =
            c < labels.size() ? labels[c] : "chain " + std::to_string(c + 1);
        svg << "  <rect x=\"" << kMargin << "\" y=\"" << ly << "\" width=\"12\" height=\"12\" "
            << "fill=\"" << color(c) << "\" stroke=\"#444444\"/>\n";
        svg << "  <text x=\"" << kMargin + 18 << "\" y=\"" << ly + 11
            << "\" font-family=\"monospace\" font-size=\"12\">" << label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open temporary file: " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed: " + path);
    }
}

} // namespace linlay

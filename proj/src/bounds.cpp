#include "linlay/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace linlay {

namespace {

const double kAlpha = 1.0 - 1.0 / std::sqrt(2.0);

int floor_plus_one(double strict_lower) {
    return static_cast<int>(std::floor(strict_lower)) + 1;
}

} // namespace

BoundTable evaluate_bounds(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    BoundTable t;
    t.n = n;
    t.lqn_lower_strict = kAlpha * n - (9.0 - 4.0 * std::sqrt(2.0)) / 16.0;
    t.lqn_lower = std::max(1, floor_plus_one(t.lqn_lower_strict));
    t.lqn_upper = static_cast<int>(std::ceil(kAlpha * n)) + 1;
    t.uqn_upper = static_cast<int>(std::ceil(kAlpha * (n + 1))) + 42;
    t.lpn_lower_strict = n / 3.0 - 1.0;
    t.lpn_lower = std::max(1, floor_plus_one(t.lpn_lower_strict));
    t.lpn_upper = static_cast<int>(std::floor(n / 3.0 + 4.0));
    t.upn_upper = static_cast<int>(std::floor(4.0 * n / 9.0 + 18.0));
    t.qn = n / 2;
    t.pn = (n + 1) / 2;
    t.density_lower = (n - 1) / 4.0;
    return t;
}

namespace {

struct Searcher {
    int n;
    int k;
    LayoutKind kind;
    LayoutVariant variant;
    std::vector<Edge> edges;
    std::vector<Part> parts;                     // parts[0..used-1] in use
    std::vector<std::vector<int>> incidence;     // [vertex][part] edge counts
    std::vector<int> locality;                   // parts touching each vertex
    long long nodes = 0;
    std::optional<Layout> witness;

    bool part_ok(const Part& part) const {
        switch (variant) {
            case LayoutVariant::Plain:
                return kind == LayoutKind::Queue ? part_is_queue(part) : part_is_page(part);
            case LayoutVariant::Union:
                return kind == LayoutKind::Queue ? part_is_union_queue(part)
                                                 : part_is_union_page(part);
        }
        return false;
    }

    bool search(std::size_t idx) {
        ++nodes;
        if (idx == edges.size()) {
            Layout layout;
            layout.n = n;
            layout.kind = kind;
            layout.variant = variant;
            layout.parts = parts;
            for (std::size_t i = 0; i < layout.parts.size(); ++i)
                layout.parts[i].id = static_cast<int>(i);
            witness = std::move(layout);
            return true;
        }
        const Edge e = edges[idx];
        // Symmetry breaking: a fresh part may be opened only as parts.size().
        std::size_t limit = parts.size() + 1;
        for (std::size_t p = 0; p < limit; ++p) {
            if (p == parts.size()) parts.push_back({static_cast<int>(p), {}});
            Part& part = parts[p];
            part.edges.push_back(e);
            bool fits = part_ok(part);
            int pi = static_cast<int>(p);
            bool bumped_a = false, bumped_b = false;
            if (fits) {
                for (int v : {e.a, e.b}) {
                    auto& count = incidence[static_cast<std::size_t>(v)][p];
                    if (count == 0) {
                        ++locality[static_cast<std::size_t>(v)];
                        (v == e.a ? bumped_a : bumped_b) = true;
                    }
                    ++count;
                    if (locality[static_cast<std::size_t>(v)] > k) fits = false;
                }
            } else {
                pi = -1;
            }
            if (fits && search(idx + 1)) return true;
            if (pi >= 0) {
                for (int v : {e.a, e.b}) {
                    auto& count = incidence[static_cast<std::size_t>(v)][p];
                    --count;
                    if (count == 0 && (v == e.a ? bumped_a : bumped_b))
                        --locality[static_cast<std::size_t>(v)];
                }
            }
            part.edges.pop_back();
            if (p + 1 == limit && part.edges.empty() && p == parts.size() - 1) parts.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<Layout> exists_k_local_layout(int n, int k, LayoutKind kind, LayoutVariant variant,
                                            int cap_override, long long* nodes_out,
                                            bool reverse_edge_order) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    int cap = variant == LayoutVariant::Plain ? 7 : 6;
    if (cap_override > 0) cap = cap_override;
    if (n > cap) {
        if (cap_override > 0)
            std::fprintf(stderr,
                         "warning: exhaustive search beyond the default cap (n=%d); "
                         "this may take a very long time\n",
                         n);
        else
            throw std::invalid_argument("n exceeds the exhaustive-search cap");
    }
    Searcher s;
    s.n = n;
    s.k = k;
    s.kind = kind;
    s.variant = variant;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) s.edges.emplace_back(a, b);
    // Recursion holds references into parts; never let it reallocate.
    s.parts.reserve(s.edges.size() + 1);
    if (reverse_edge_order) std::reverse(s.edges.begin(), s.edges.end());
    s.incidence.assign(static_cast<std::size_t>(n) + 1,
                       std::vector<int>(s.edges.size() + 1, 0));
    s.locality.assign(static_cast<std::size_t>(n) + 1, 0);

    bool found = s.search(0);
    if (nodes_out) *nodes_out = s.nodes;
    return found ? s.witness : std::nullopt;
}

ExactResult exact_number(int n, LayoutParameter parameter, int cap_override) {
    LayoutKind kind = (parameter == LayoutParameter::LocalQueue ||
                       parameter == LayoutParameter::UnionQueue)
                          ? LayoutKind::Queue
                          : LayoutKind::Page;
    LayoutVariant variant = (parameter == LayoutParameter::UnionQueue ||
                             parameter == LayoutParameter::UnionPage)
                                ? LayoutVariant::Union
                                : LayoutVariant::Plain;
    ExactResult result;
    result.n = n;
    result.parameter = parameter;
    if (n < 2) {
        Layout layout;
        layout.n = n;
        layout.kind = kind;
        layout.variant = variant;
        result.value = 0;
        result.witness = layout;
        return result;
    }
    for (int k = 1; k <= n; ++k) {
        long long nodes = 0;
        auto found = exists_k_local_layout(n, k, kind, variant, cap_override, &nodes);
        result.nodes_explored += nodes;
        if (found) {
            result.value = k;
            result.witness = std::move(*found);
            return result;
        }
    }
    throw std::logic_error("no layout found up to k = n");
}

std::string to_string(LayoutParameter parameter) {
    switch (parameter) {
        case LayoutParameter::LocalQueue: return "lqn";
        case LayoutParameter::LocalPage: return "lpn";
        case LayoutParameter::UnionQueue: return "uqn";
        case LayoutParameter::UnionPage: return "upn";
    }
    return "?";
}

std::optional<LayoutParameter> parse_parameter(const std::string& text) {
    if (text == "lqn") return LayoutParameter::LocalQueue;
    if (text == "lpn") return LayoutParameter::LocalPage;
    if (text == "uqn") return LayoutParameter::UnionQueue;
    if (text == "upn") return LayoutParameter::UnionPage;
    return std::nullopt;
}

} // namespace linlay

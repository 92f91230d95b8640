#include "linlay/page_builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linlay {

namespace {

// 1-based circular representative of j in 1..n.
int wrap(long long j, int n) {
    long long r = (j - 1) % n;
    if (r < 0) r += n;
    return static_cast<int>(r + 1);
}

Edge circular_edge(long long a, long long b, int n) { return Edge(wrap(a, n), wrap(b, n)); }

Gadget make_gadget(std::string name, int t, std::vector<std::pair<long long, long long>> raw,
                   int n) {
    Gadget g;
    g.name = std::move(name);
    g.t = t;
    std::set<int> verts;
    for (auto [a, b] : raw) {
        Edge e = circular_edge(a, b, n);
        g.edges.push_back(e);
        verts.insert(e.a);
        verts.insert(e.b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.vertices.assign(verts.begin(), verts.end());
    return g;
}

// Accumulates parts in a fixed order and keeps each edge only on the
// earliest part that proposes it.
class PartAssembler {
  public:
    explicit PartAssembler(int n) : n_(n) {}

    void add(const std::vector<Edge>& edges) {
        Part part;
        part.id = static_cast<int>(parts_.size());
        for (const Edge& e : edges)
            if (seen_.insert(e).second) part.edges.push_back(e);
        if (part.edges.empty()) return;
        std::sort(part.edges.begin(), part.edges.end());
        parts_.push_back(std::move(part));
    }

    Layout finish(LayoutVariant variant) {
        if (seen_.size() != static_cast<std::size_t>(n_) * (n_ - 1) / 2)
            throw std::logic_error("page assembly does not cover K_n");
        Layout layout;
        layout.n = n_;
        layout.kind = LayoutKind::Page;
        layout.variant = variant;
        layout.parts = std::move(parts_);
        return layout;
    }

    std::size_t part_count() const { return parts_.size(); }

  private:
    int n_;
    std::set<Edge> seen_;
    std::vector<Part> parts_;
};

} // namespace

Layout zigzag_page_layout(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    PartAssembler assembler(n);
    for (int p = 1; p <= (n + 1) / 2; ++p) {
        std::vector<int> path{p};
        for (int m = 1; 2 * m <= n - 1; ++m) {
            path.push_back(wrap(p + m, n));
            path.push_back(wrap(p - m, n));
        }
        if (n % 2 == 0) path.push_back(wrap(p + n / 2, n));
        std::vector<Edge> edges;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            edges.emplace_back(path[i], path[i + 1]);
        assembler.add(edges);
    }
    if (n == 1) {
        Layout layout;
        layout.n = 1;
        layout.kind = LayoutKind::Page;
        return layout;
    }
    return assembler.finish(LayoutVariant::Plain);
}

Gadget local_page_gadget(int k, int t) {
    if (k < 1 || t < 0 || t >= k) throw std::invalid_argument("gadget parameter out of range");
    const int n = 18 * k - 3;
    const long long r1 = 1, r2 = 2 * k - 2 * t, r3 = 5 * k + 1, r4 = 8 * k - t,
                    r5 = 8 * k + t, r6 = 13 * k + 2 * t;
    std::vector<std::pair<long long, long long>> raw{{r1, r2}, {r2, r3}, {r3, r4},
                                                     {r5, r6}, {r6, r1}, {r1, r4}, {r2, r4}};
    if (t > 0) {
        raw.push_back({r4, r5});  // a loop at t = 0
        raw.push_back({r1, r5});  // equals r1r4 at t = 0
    }
    return make_gadget("O", t, std::move(raw), n);
}

namespace {

// Exact local-page layout for n = 18k-3: one page per vertex and t.
Layout exact_local_page_layout(int k) {
    const int n = 18 * k - 3;
    PartAssembler assembler(n);
    std::vector<Gadget> base;
    for (int t = 0; t < k; ++t) base.push_back(local_page_gadget(k, t));
    for (int i = 1; i <= n; ++i)
        for (const Gadget& g : base) {
            std::vector<Edge> edges;
            for (const Edge& e : g.edges) edges.push_back(circular_edge(e.a + i - 1, e.b + i - 1, n));
            assembler.add(edges);
        }
    Layout layout = assembler.finish(LayoutVariant::Plain);
    if (layout.parts.size() != static_cast<std::size_t>(n) * k)
        throw std::logic_error("exact local-page layout lost a page");
    return layout;
}

// Drops vertices above new_n; empty parts disappear, ids are renumbered.
Layout shrink_layout(const Layout& layout, int new_n) {
    Layout out;
    out.n = new_n;
    out.kind = layout.kind;
    out.variant = layout.variant;
    for (const auto& part : layout.parts) {
        Part kept;
        kept.id = static_cast<int>(out.parts.size());
        for (const Edge& e : part.edges)
            if (e.b <= new_n) kept.edges.push_back(e);
        if (!kept.edges.empty()) out.parts.push_back(std::move(kept));
    }
    return out;
}

// Appends extra vertices old_n+1..n, one star page each (edges to all
// earlier vertices).
Layout pad_with_stars(Layout layout, int n) {
    int old_n = layout.n;
    layout.n = n;
    for (int v = old_n + 1; v <= n; ++v) {
        Part star;
        star.id = static_cast<int>(layout.parts.size());
        for (int u = 1; u < v; ++u) star.edges.emplace_back(u, v);
        layout.parts.push_back(std::move(star));
    }
    return layout;
}

int max_locality(const Layout& layout) {
    int best = 0;
    for (int loc : locality_profile(layout)) best = std::max(best, loc);
    return best;
}

} // namespace

Layout build_local_page_layout(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n <= 2) {
        Layout layout;
        layout.n = n;
        layout.kind = LayoutKind::Page;
        if (n == 2) layout.parts.push_back({0, {Edge(1, 2)}});
        return layout;
    }
    if ((n + 3) % 18 == 0) return exact_local_page_layout((n + 3) / 18);

    const int k_above = (n + 3 + 17) / 18;  // smallest k with 18k-3 >= n
    Layout shrunk = shrink_layout(exact_local_page_layout(k_above), n);
    if (n < 15) return shrunk;
    Layout padded = pad_with_stars(exact_local_page_layout(k_above - 1), n);
    return max_locality(padded) <= max_locality(shrunk) ? padded : shrunk;
}

std::pair<Gadget, Gadget> union_page_gadgets(int k, int t) {
    if (k < 3 || k % 3 != 0) throw std::invalid_argument("k must be a positive multiple of 3");
    if (t < 0 || t >= k) throw std::invalid_argument("t out of range");
    const int n = 18 * k;
    const long long r1 = 1 + t, r2 = 8 * k + 1 - t, r3 = 9 * k + 1 + 2 * t,
                    r4 = 12 * k - t, r5 = 17 * k - 2 * t;
    Gadget g = make_gadget("G", t,
                           {{r1, r2}, {r1, r3}, {r1, r4}, {r1, r5}, {r2, r3}, {r3, r4}, {r4, r5}},
                           n);
    Gadget h = make_gadget("H", t, {{3 * k, 8 * k + 1 + t}}, n);
    return {std::move(g), std::move(h)};
}

namespace {

// Two union pages that together cover all edges of one circular length:
// alternate coloring around each circulant cycle. Odd cycles leave one pair
// of edges sharing a vertex in the same class; that component is a
// crossing-free 2-edge path, so both classes remain valid union pages.
std::pair<std::vector<Edge>, std::vector<Edge>> length_class_matchings(int length, int n) {
    std::pair<std::vector<Edge>, std::vector<Edge>> out;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int v = start; !seen[static_cast<std::size_t>(v)]; v = wrap(v + length, n)) {
            seen[static_cast<std::size_t>(v)] = 1;
            cycle.push_back(v);
        }
        if (cycle.size() == 1) continue;
        if (cycle.size() == 2) {  // length == n/2: one edge per doubleton
            out.first.push_back(Edge(cycle[0], cycle[1]));
            continue;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Edge e = circular_edge(cycle[i], cycle[i] + length, n);
            (i % 2 == 0 ? out.first : out.second).push_back(e);
        }
    }
    return out;
}

// Exact union-page layout for n = 18k, k divisible by 3: exactly 4n/9 + 4
// parts after deduplication.
Layout exact_union_page_layout(int k) {
    const int n = 18 * k;
    PartAssembler assembler(n);

    std::vector<std::pair<Gadget, Gadget>> base;
    for (int t = 0; t < k; ++t) base.push_back(union_page_gadgets(k, t));
    auto add_rotated = [&](const Gadget& g, int offset, std::vector<Edge>& sink) {
        for (const Edge& e : g.edges) sink.push_back(circular_edge(e.a + offset, e.b + offset, n));
    };
    for (int i = 1; i <= n / 3; ++i) {
        std::vector<Edge> edges;
        for (int j : {i, i + n / 3, i + 2 * n / 3}) {
            for (int t = 0; t < k; ++t) add_rotated(base[static_cast<std::size_t>(t)].first, j - 1, edges);
            for (int t = 1; t < k; ++t) add_rotated(base[static_cast<std::size_t>(t)].second, j - 1, edges);
        }
        assembler.add(edges);
    }
    auto [m1, m2] = length_class_matchings(5 * k + 1, n);
    assembler.add(m1);
    assembler.add(m2);
    for (int i = 1; i <= k; ++i) {  // short stars S_i: lengths 1..k-1
        std::vector<Edge> edges;
        for (int j = 0; j < 18; ++j)
            for (int d = 1; d < k; ++d) edges.push_back(circular_edge(i + j * k, i + j * k + d, n));
        assembler.add(edges);
    }
    for (int i = 1; i <= k; ++i) {  // long stars T_i: lengths 3k+1..4k-1
        std::vector<Edge> edges;
        for (int j = 0; j < 18; ++j)
            for (int d = 3 * k + 1; d < 4 * k; ++d)
                edges.push_back(circular_edge(i + j * k, i + j * k + d, n));
        assembler.add(edges);
    }
    auto [m3, m4] = length_class_matchings(4 * k, n);
    assembler.add(m3);
    assembler.add(m4);

    Layout layout = assembler.finish(LayoutVariant::Union);
    if (layout.parts.size() != static_cast<std::size_t>(4 * n / 9 + 4))
        throw std::logic_error("exact union-page layout has the wrong part count");
    return layout;
}

Layout zigzag_as_union(int n) {
    Layout layout = zigzag_page_layout(n);
    layout.variant = LayoutVariant::Union;
    return layout;
}

} // namespace

Layout build_union_page_layout(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n >= 54 && n % 54 == 0) return exact_union_page_layout(n / 18);

    std::vector<Layout> candidates;
    if (n > 54) {
        int below = n / 54 * 54;
        candidates.push_back(pad_with_stars(exact_union_page_layout(below / 18), n));
        candidates.back().variant = LayoutVariant::Union;
    }
    int above = (n + 53) / 54 * 54;
    if (n >= 2) candidates.push_back(shrink_layout(exact_union_page_layout(above / 18), n));
    candidates.push_back(zigzag_as_union(n));

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].parts.size() < candidates[best].parts.size()) best = i;
    return std::move(candidates[best]);
}

} // namespace linlay

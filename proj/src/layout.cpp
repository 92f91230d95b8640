#include "linlay/layout.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace linlay {

Relation edge_relation(const Edge& e, const Edge& f) {
    if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b)
        return Relation::SharedEndpoint;
    const Edge& l = (e.a < f.a) ? e : f;
    const Edge& r = (e.a < f.a) ? f : e;
    if (r.a > l.b) return Relation::DisjointOrdered;
    // l.a < r.a < l.b
    return (r.b < l.b) ? Relation::Nested : Relation::Crossing;
}

namespace {

// Non-nesting sweep: sorted by left endpoint, right endpoints of strictly
// later groups may never drop below an earlier group's maximum.
bool edges_non_nesting(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    int prev_max_b = 0;
    std::size_t i = 0;
    while (i < edges.size()) {
        std::size_t j = i;
        int group_max = 0;
        while (j < edges.size() && edges[j].a == edges[i].a) {
            if (edges[j].b < prev_max_b) return false;
            group_max = std::max(group_max, edges[j].b);
            ++j;
        }
        prev_max_b = std::max(prev_max_b, group_max);
        i = j;
    }
    return true;
}

// Non-crossing sweep via parenthesis matching along the spine.
bool edges_non_crossing(const std::vector<Edge>& edges) {
    if (edges.size() < 2) return true;
    std::map<int, std::vector<Edge>> starts, ends;
    int lo = edges.front().a, hi = edges.front().b;
    for (const Edge& e : edges) {
        starts[e.a].push_back(e);
        ends[e.b].push_back(e);
        lo = std::min(lo, e.a);
        hi = std::max(hi, e.b);
    }
    std::vector<Edge> stack;
    for (int v = lo; v <= hi; ++v) {
        if (auto it = ends.find(v); it != ends.end()) {
            auto& closing = it->second;
            std::sort(closing.begin(), closing.end(),
                      [](const Edge& x, const Edge& y) { return x.a > y.a; });
            for (const Edge& e : closing) {
                if (stack.empty() || !(stack.back() == e)) return false;
                stack.pop_back();
            }
        }
        if (auto it = starts.find(v); it != starts.end()) {
            auto& opening = it->second;
            std::sort(opening.begin(), opening.end(),
                      [](const Edge& x, const Edge& y) { return x.b > y.b; });
            for (const Edge& e : opening) stack.push_back(e);
        }
    }
    return stack.empty();
}

std::vector<std::vector<Edge>> connected_components(const Part& part) {
    std::map<int, int> root;
    std::function<int(int)> find = [&](int v) {
        int r = v;
        while (root[r] != r) r = root[r];
        while (root[v] != r) { int nx = root[v]; root[v] = r; v = nx; }
        return r;
    };
    for (const Edge& e : part.edges) {
        if (!root.count(e.a)) root[e.a] = e.a;
        if (!root.count(e.b)) root[e.b] = e.b;
        root[find(e.a)] = find(e.b);
    }
    std::map<int, std::vector<Edge>> comps;
    for (const Edge& e : part.edges) comps[find(e.a)].push_back(e);
    std::vector<std::vector<Edge>> out;
    out.reserve(comps.size());
    for (auto& [r, es] : comps) out.push_back(std::move(es));
    return out;
}

void check_edges_in_range(const Layout& layout) {
    for (const auto& part : layout.parts)
        for (const Edge& e : part.edges)
            if (e.a < 1 || e.b > layout.n)
                throw std::invalid_argument("edge index out of range for n=" +
                                            std::to_string(layout.n));
}

bool part_valid_for(const Layout& layout, const Part& part) {
    if (layout.kind == LayoutKind::Queue)
        return layout.variant == LayoutVariant::Plain ? part_is_queue(part)
                                                      : part_is_union_queue(part);
    return layout.variant == LayoutVariant::Plain ? part_is_page(part)
                                                  : part_is_union_page(part);
}

} // namespace

bool part_is_queue(const Part& part) { return edges_non_nesting(part.edges); }

bool part_is_page(const Part& part) { return edges_non_crossing(part.edges); }

bool part_is_union_queue(const Part& part) {
    for (const auto& comp : connected_components(part))
        if (!edges_non_nesting(comp)) return false;
    return true;
}

bool part_is_union_page(const Part& part) {
    for (const auto& comp : connected_components(part))
        if (!edges_non_crossing(comp)) return false;
    return true;
}

std::vector<int> locality_profile(const Layout& layout) {
    std::vector<int> counts(static_cast<std::size_t>(std::max(layout.n, 0)), 0);
    std::vector<char> touched(counts.size());
    for (const auto& part : layout.parts) {
        std::fill(touched.begin(), touched.end(), 0);
        for (const Edge& e : part.edges) {
            touched[static_cast<std::size_t>(e.a - 1)] = 1;
            touched[static_cast<std::size_t>(e.b - 1)] = 1;
        }
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += touched[i];
    }
    return counts;
}

VerificationReport verify_layout(const Layout& layout) {
    if (layout.n < 0) throw std::invalid_argument("negative vertex count");
    check_edges_in_range(layout);

    VerificationReport report;
    report.part_valid.reserve(layout.parts.size());
    for (const auto& part : layout.parts) {
        std::set<Edge> uniq(part.edges.begin(), part.edges.end());
        if (uniq.size() != part.edges.size())
            throw std::invalid_argument("duplicate edge within part " +
                                        std::to_string(part.id));
        bool valid = part_valid_for(layout, part);
        report.part_valid.push_back(valid);
        report.all_parts_valid = report.all_parts_valid && valid;
        if (!part.edges.empty()) ++report.part_count;
    }

    std::set<Edge> seen;
    for (const auto& part : layout.parts)
        for (const Edge& e : part.edges)
            if (!seen.insert(e).second)
                throw std::invalid_argument("edge covered twice: (" +
                                            std::to_string(e.a) + "," +
                                            std::to_string(e.b) + ")");
    const std::size_t total =
        static_cast<std::size_t>(layout.n) * (layout.n - 1) / 2;
    report.covered = seen.size() == total;

    report.locality = locality_profile(layout);
    report.max_locality = 0;
    for (int c : report.locality) report.max_locality = std::max(report.max_locality, c);
    return report;
}

QueueStatistics queue_statistics(const Layout& layout) {
    if (layout.kind != LayoutKind::Queue || layout.variant != LayoutVariant::Plain)
        throw std::invalid_argument("queue_statistics needs a plain queue layout");
    VerificationReport report = verify_layout(layout);
    if (!report.ok())
        throw std::invalid_argument("queue_statistics needs a valid exact-cover layout");

    const auto nverts = static_cast<std::size_t>(layout.n);
    QueueStatistics stats;
    stats.left_longest.assign(nverts, 0);
    stats.right_shortest.assign(nverts, 0);
    stats.both_sided.assign(nverts, 0);

    for (const auto& part : layout.parts) {
        std::map<int, int> min_left;   // right endpoint -> smallest left endpoint
        std::map<int, int> min_right;  // left endpoint -> smallest right endpoint
        for (const Edge& e : part.edges) {
            auto [lit, lnew] = min_left.try_emplace(e.b, e.a);
            if (!lnew) lit->second = std::min(lit->second, e.a);
            auto [rit, rnew] = min_right.try_emplace(e.a, e.b);
            if (!rnew) rit->second = std::min(rit->second, e.b);
        }
        // Totality: each edge is maximal for its right endpoint or minimal for
        // its left endpoint within its queue.
        for (const Edge& e : part.edges)
            if (min_left[e.b] != e.a && min_right[e.a] != e.b)
                throw std::logic_error("edge neither left-longest nor right-shortest");
        for (const auto& [v, _] : min_left) stats.left_longest[static_cast<std::size_t>(v - 1)]++;
        for (const auto& [v, _] : min_right) stats.right_shortest[static_cast<std::size_t>(v - 1)]++;
        for (const auto& [v, _] : min_left)
            if (min_right.count(v)) stats.both_sided[static_cast<std::size_t>(v - 1)]++;
    }

    for (std::size_t i = 0; i < nverts; ++i) {
        int b = stats.both_sided[i];
        int cap = std::min<int>(static_cast<int>(i), layout.n - 1 - static_cast<int>(i));
        if (b > cap) throw std::logic_error("b_i exceeds min(i-1, n-i)");
        if (stats.left_longest[i] + stats.right_shortest[i] - b != report.locality[i])
            throw std::logic_error("queue statistics identity violated");
    }
    return stats;
}

PageStatistics page_statistics(const Layout& layout) {
    if (layout.kind != LayoutKind::Page || layout.variant != LayoutVariant::Plain)
        throw std::invalid_argument("page_statistics needs a plain page layout");
    VerificationReport report = verify_layout(layout);
    if (!report.ok())
        throw std::invalid_argument("page_statistics needs a valid exact-cover layout");

    const int n = layout.n;
    PageStatistics stats;
    stats.red_forward.assign(static_cast<std::size_t>(n), 0);
    stats.black_forward.assign(static_cast<std::size_t>(n), 0);

    long long vertex_page_incidences = 0;
    for (const auto& part : layout.parts) {
        std::set<int> verts;
        std::set<Edge> in_part(part.edges.begin(), part.edges.end());
        for (const Edge& e : part.edges) { verts.insert(e.a); verts.insert(e.b); }
        if (verts.size() < 2) { ++stats.skipped_parts; continue; }

        PagePartStatistics pp;
        pp.part_id = part.id;
        pp.hull_vertices.assign(verts.begin(), verts.end());
        const auto m = pp.hull_vertices.size();
        vertex_page_incidences += static_cast<long long>(m);

        std::set<Edge> hull;
        for (std::size_t i = 0; i < m; ++i) {
            int u = pp.hull_vertices[i];
            int v = pp.hull_vertices[(i + 1) % m];
            // Forward (clockwise) hull edge u -> v on the circular spine.
            int len = (v - u) > 0 ? (v - u) : (v - u + n);
            pp.hull_length_sum += len;
            if (in_part.count(Edge(u, v)))
                stats.black_forward[static_cast<std::size_t>(u - 1)]++;
            else
                stats.red_forward[static_cast<std::size_t>(u - 1)]++;
            if (m == 2 && i == 1) break;  // degenerate hull: one undirected edge
            hull.insert(Edge(u, v));
        }
        if (pp.hull_length_sum != n)
            throw std::logic_error("circular hull lengths do not sum to n");

        for (const Edge& e : hull)
            (in_part.count(e) ? pp.black_edges : pp.red_edges).push_back(e);
        for (const Edge& e : part.edges)
            if (!hull.count(e)) pp.green_edges.push_back(e);

        if (pp.black_edges.size() + pp.red_edges.size() != hull.size())
            throw std::logic_error("hull classification mismatch");
        if (pp.green_edges.size() >
            static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(m) - 3)))
            throw std::logic_error("outerplanar inner-edge bound violated");
        stats.parts.push_back(std::move(pp));
    }

    for (int r : stats.red_forward) stats.total_red += r;
    for (int b : stats.black_forward) stats.total_black += b;
    if (stats.total_red + stats.total_black != vertex_page_incidences)
        throw std::logic_error("R + B != sum of |V_P|");
    return stats;
}

std::string to_string(LayoutKind kind) {
    return kind == LayoutKind::Queue ? "queue" : "page";
}

std::string to_string(LayoutVariant variant) {
    return variant == LayoutVariant::Plain ? "plain" : "union";
}

} // namespace linlay

#include "linlay/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace linlay {

TrianglePoint edge_to_point(const Edge& e, int n) {
    if (e.b > n + 1) throw std::invalid_argument("edge outside K_{n+1}");
    return TrianglePoint{e.a, n + 2 - e.b};
}

Edge point_to_edge(const TrianglePoint& p, int n) {
    if (!in_triangle(p, n)) throw std::invalid_argument("point outside T_n");
    return Edge(p.x, n + 2 - p.y);
}

std::vector<TrianglePoint> hook_of_vertex(int i, int n) {
    if (i < 1 || i > n + 1) throw std::invalid_argument("vertex index out of range");
    std::vector<TrianglePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int y = 1; i + y <= n + 1; ++y) pts.push_back({i, y});
    const int row = n + 2 - i;
    for (int x = 1; x + row <= n + 1; ++x) pts.push_back({x, row});
    return pts;
}

bool chain_is_valid(const Chain& chain) {
    Chain sorted = chain;
    canonicalize_chain(sorted);
    int min_y_before = 0;  // min y over strictly smaller x, 0 = none yet
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        int group_min = sorted[i].y;
        while (j < sorted.size() && sorted[j].x == sorted[i].x) {
            if (min_y_before != 0 && sorted[j].y > min_y_before) return false;
            group_min = std::min(group_min, sorted[j].y);
            ++j;
        }
        min_y_before = (min_y_before == 0) ? group_min : std::min(min_y_before, group_min);
        i = j;
    }
    return true;
}

void canonicalize_chain(Chain& chain) {
    std::sort(chain.begin(), chain.end(), [](const TrianglePoint& p, const TrianglePoint& q) {
        return p.x != q.x ? p.x < q.x : p.y > q.y;
    });
}

namespace {

// Flat index of (x,y) in T_n, row-major from row 1 upward.
inline std::size_t point_index(const TrianglePoint& p, int n) {
    long long row_offset = static_cast<long long>(p.y - 1) * (2 * n - p.y + 2) / 2;
    return static_cast<std::size_t>(row_offset + p.x - 1);
}

} // namespace

Layout chains_to_queue_layout(const std::vector<Chain>& chains, int n) {
    std::vector<char> covered(static_cast<std::size_t>(triangle_size(n)), 0);
    long long count = 0;
    for (const auto& chain : chains) {
        if (!chain_is_valid(chain)) throw std::invalid_argument("invalid chain");
        for (const auto& p : chain) {
            if (!in_triangle(p, n)) throw std::invalid_argument("point outside T_n");
            auto idx = point_index(p, n);
            if (covered[idx]) throw std::invalid_argument("chains overlap");
            covered[idx] = 1;
            ++count;
        }
    }
    if (count != triangle_size(n))
        throw std::invalid_argument("chains do not cover T_n");

    Layout layout;
    layout.n = n + 1;
    layout.kind = LayoutKind::Queue;
    layout.variant = LayoutVariant::Plain;
    int id = 0;
    for (const auto& chain : chains) {
        if (chain.empty()) continue;
        Part part;
        part.id = id++;
        part.edges.reserve(chain.size());
        for (const auto& p : chain) part.edges.push_back(point_to_edge(p, n));
        std::sort(part.edges.begin(), part.edges.end());
        layout.parts.push_back(std::move(part));
    }
    return layout;
}

int max_hook_chain_incidence(const std::vector<Chain>& chains, int n) {
    // chain id per point; -1 = uncovered
    std::vector<int> owner(static_cast<std::size_t>(triangle_size(n)), -1);
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (const auto& p : chains[c]) owner[point_index(p, n)] = static_cast<int>(c);

    int best = 0;
    std::vector<int> last_seen(chains.size(), -1);
    for (int i = 1; i <= n + 1; ++i) {
        int met = 0;
        for (const auto& p : hook_of_vertex(i, n)) {
            int c = owner[point_index(p, n)];
            if (c >= 0 && last_seen[static_cast<std::size_t>(c)] != i) {
                last_seen[static_cast<std::size_t>(c)] = i;
                ++met;
            }
        }
        best = std::max(best, met);
    }
    return best;
}

} // namespace linlay

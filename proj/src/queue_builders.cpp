#include "linlay/queue_builders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace linlay {

namespace {

const long double kAlpha = 1.0L - 1.0L / std::sqrt(2.0L);

int ceil_alpha_times(long long x) {
    return static_cast<int>(std::ceil(kAlpha * static_cast<long double>(x)));
}

std::size_t point_index(const TrianglePoint& p, int n) {
    long long row_offset = static_cast<long long>(p.y - 1) * (2 * n - p.y + 2) / 2;
    return static_cast<std::size_t>(row_offset + p.x - 1);
}

// Column segment clipped to T_n; empty when the range is empty.
Chain column_segment(int col, int ylo, int yhi, int n) {
    Chain pts;
    ylo = std::max(ylo, 1);
    yhi = std::min(yhi, n + 1 - col);
    for (int y = ylo; y <= yhi; ++y) pts.push_back({col, y});
    return pts;
}

Chain reflect(const Chain& pts) {
    Chain out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.y, p.x});
    return out;
}

// The L-shaped diagonal chain used by both the flat and the recursive cover:
// top of column i, an anti-diagonal staircase, and the right end of row i.
Chain diagonal_chain(int i, int n, int k) {
    std::set<TrianglePoint> pts;
    for (int y = std::max(1, n - 2 * k + i); y <= std::min(n + 1 - i, n + 1 - i); ++y)
        pts.insert({i, y});
    for (int sum = n - 2 * (k - i); sum <= n - 2 * (k - i) + 1; ++sum)
        for (int x = std::max(1, i); x <= sum - i; ++x) {
            TrianglePoint p{x, sum - x};
            if (in_triangle(p, n) && p.y >= i) pts.insert(p);
        }
    for (int x = std::max(1, n - 2 * k + i); x <= n + 1 - i; ++x) {
        TrianglePoint p{x, i};
        if (in_triangle(p, n)) pts.insert(p);
    }
    return Chain(pts.begin(), pts.end());
}

struct OwnerGrid {
    int n;
    std::vector<int> owner;
    explicit OwnerGrid(int n_) : n(n_), owner(static_cast<std::size_t>(triangle_size(n_)), -1) {}
    // Paints p with id unless already painted; returns true if p was free.
    bool claim(const TrianglePoint& p, int id) {
        auto& slot = owner[point_index(p, n)];
        if (slot >= 0) return false;
        slot = id;
        return true;
    }
};

} // namespace

int smallest_even_k_for_triangle(int n) {
    int k = ceil_alpha_times(n + 1);
    return k % 2 == 0 ? k : k + 1;
}

int union_queue_budget(int n) { return ceil_alpha_times(n + 1) + 42; }

int local_queue_budget(int n) { return ceil_alpha_times(n) + 1; }

std::vector<Chain> elbow_chains(int m) {
    std::vector<Chain> chains;
    for (int i = 1; 2 * i <= m + 1; ++i) {
        Chain chain;
        for (int y = m + 1 - i; y >= i; --y) chain.push_back({i, y});
        for (int x = i + 1; x <= m + 1 - i; ++x) chain.push_back({x, i});
        chains.push_back(std::move(chain));
    }
    return chains;
}

Layout elbow_queue_layout(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return chains_to_queue_layout(elbow_chains(n - 1), n - 1);
}

std::string FlatChain::name() const {
    static const char* tags = "LABCDEFG";
    std::string s(1, tags[static_cast<int>(family)]);
    if (hatted) s = "^" + s;
    s += std::to_string(index);
    if (primed) s += "'";
    return s;
}

std::pair<int, int> FlatChain::interval() const {
    int lo = 0, hi = 0;
    for (const auto& p : points) {
        int c = orientation == ChainOrientation::Vertical ? p.y : p.x;
        if (lo == 0 || c < lo) lo = c;
        if (c > hi) hi = c;
    }
    return {lo, hi};
}

FlatCover build_flat_chain_cover(int n, int k) {
    if (n % 2 != 0 || k % 2 != 0)
        throw std::invalid_argument("flat cover needs even n and even k");
    if (static_cast<long double>(k) < kAlpha * (n + 1))
        throw std::invalid_argument("flat cover needs k >= (1-1/sqrt(2))(n+1)");
    if (3 * n < 10 * k) throw std::invalid_argument("flat cover needs 3n >= 10k");

    const int a = n - 3 * k;        // side of the A-square region
    const int h = (4 * k - n) / 2;  // chains per sloped family
    const int g = (3 * n - 10 * k) / 2;

    // Slope s = a/h as a fraction; floor/ceil of s*i.
    auto floor_si = [&](int i) { return (a * i) / h; };
    auto ceil_si = [&](int i) { return (a * i + h - 1) / h; };

    std::vector<FlatChain> verticals;
    auto add = [&](ChainFamilyTag fam, bool hat, int idx, int col, int ylo, int yhi) {
        Chain pts = column_segment(col, ylo, yhi, n);
        if (pts.empty()) return;
        verticals.push_back({fam, false, hat, idx, ChainOrientation::Vertical, col, std::move(pts)});
    };

    for (int i = 1; i <= a; ++i) add(ChainFamilyTag::A, false, i, i, i, std::min(a / 2 + i - 1, a));
    for (int i = 1; i <= a; ++i) add(ChainFamilyTag::A, true, i, i, 1, i - a / 2);
    for (int i = 1; i <= h; ++i)
        add(ChainFamilyTag::B, false, i, a + i, floor_si(i), std::min(ceil_si(i) + g, a));
    for (int i = 1; i <= h; ++i) add(ChainFamilyTag::B, true, i, a + i, 1, ceil_si(i) + g - a);
    // Family C fills, per column j <= a, exactly the rows of the band
    // (a, a+h] left free by the horizontal reflections of B: the run below
    // the sloped B-band wraps around as hat-C, the run above is C itself.
    for (int j = 1; j <= a; ++j) {
        std::vector<std::pair<int, int>> runs;  // row ranges of free cells
        for (int i = 1; i <= h; ++i) {
            bool covered = (floor_si(i) <= j && j <= ceil_si(i) + g) || j <= ceil_si(i) + g - a;
            if (covered) continue;
            if (!runs.empty() && runs.back().second == a + i - 1) runs.back().second = a + i;
            else runs.emplace_back(a + i, a + i);
        }
        if (runs.size() > 2) throw std::logic_error("band complement is not two runs");
        if (runs.size() == 2) add(ChainFamilyTag::C, true, j, j, runs[0].first, runs[0].second);
        if (!runs.empty())
            add(ChainFamilyTag::C, false, j, j, runs.back().first, runs.back().second);
    }
    for (int i = 1; i <= h; ++i) add(ChainFamilyTag::D, false, i, a + i, a + 1, a + i);
    for (int i = 1; i <= h; ++i)
        add(ChainFamilyTag::E, false, i, a + i, n / 2 - k + 1, k - (i - 1));
    for (int i = 1; i <= h; ++i) add(ChainFamilyTag::F, false, i, n / 2 - k + i, 1, a);
    for (int j = 1; j <= a; ++j) add(ChainFamilyTag::G, false, j, k + j, 1, a - (j - 1));

    FlatCover cover;
    cover.n = n;
    cover.k = k;
    for (int i = 1; i <= k; ++i)
        cover.chains.push_back({ChainFamilyTag::L, false, false, i,
                                ChainOrientation::Diagonal, 0, diagonal_chain(i, n, k)});
    // Vertical families in priority order A..G, then their reflections A'..G'.
    for (const auto& vc : verticals) cover.chains.push_back(vc);
    for (const auto& vc : verticals) {
        FlatChain hc = vc;
        hc.primed = true;
        hc.orientation = ChainOrientation::Horizontal;
        hc.points = reflect(vc.points);
        cover.chains.push_back(std::move(hc));
    }

    // Resolve double-covered points: the earliest chain keeps them.
    OwnerGrid grid(n);
    for (std::size_t c = 0; c < cover.chains.size(); ++c) {
        Chain kept;
        for (const auto& p : cover.chains[c].points)
            if (grid.claim(p, static_cast<int>(c))) kept.push_back(p);
        cover.chains[c].points = std::move(kept);
    }
    for (int slot : grid.owner)
        if (slot < 0) throw std::logic_error("flat cover leaves a point uncovered");
    std::erase_if(cover.chains, [](const FlatChain& c) { return c.points.empty(); });
    for (auto& c : cover.chains) {
        canonicalize_chain(c.points);
        if (!chain_is_valid(c.points)) throw std::logic_error("flat cover produced invalid chain");
    }
    return cover;
}

namespace {

// Greedy interval coloring: decreasing topmost point,
// ties by decreasing bottom; largest free color in {2,...,k+6} not equal to
// the chain's own column/row index.
void color_chains(std::vector<FlatChain*>& items, int k, std::vector<int>& color_out) {
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto [ax, bx] = items[x]->interval();
        auto [ay, by] = items[y]->interval();
        if (bx != by) return bx > by;
        if (ax != ay) return ax > ay;
        return items[x]->line < items[y]->line;  // stable tiebreak
    });
    color_out.assign(items.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        std::size_t me = order[pos];
        auto [lo, hi] = items[me]->interval();
        std::set<int> used;
        for (std::size_t q = 0; q < pos; ++q) {
            std::size_t other = order[q];
            auto [lo2, hi2] = items[other]->interval();
            if (std::max(lo, lo2) <= std::min(hi, hi2)) used.insert(color_out[other]);
        }
        int chosen = 0;
        for (int c = k + 6; c >= 2; --c)
            if (!used.count(c) && c != items[me]->line) { chosen = c; break; }
        if (chosen <= hi)
            throw std::logic_error("greedy interval coloring failed");
        color_out[me] = chosen;
    }
}

} // namespace

GroupingResult group_chains(const FlatCover& cover) {
    const int n = cover.n;
    const int k = cover.k;

    std::vector<FlatChain> verticals, horizontals;
    std::map<int, FlatChain> diagonals;  // i -> L_i
    for (const auto& c : cover.chains) {
        if (c.orientation == ChainOrientation::Diagonal) diagonals.emplace(c.index, c);
        else if (c.orientation == ChainOrientation::Vertical) verticals.push_back(c);
        else horizontals.push_back(c);
    }

    // Clique bound: a row meets at most k+4 vertical chains.
    std::map<int, int> row_load;
    for (const auto& c : verticals) {
        auto [lo, hi] = c.interval();
        for (int y = lo; y <= hi; ++y) ++row_load[y];
    }
    for (const auto& [y, load] : row_load)
        if (load > k + 4) throw std::logic_error("vertical clique bound k+4 violated");

    std::vector<FlatChain*> vitems, hitems;
    for (auto& c : verticals) vitems.push_back(&c);
    for (auto& c : horizontals) hitems.push_back(&c);
    std::vector<int> vcolor, hcolor;
    color_chains(vitems, k, vcolor);
    color_chains(hitems, k, hcolor);

    GroupingResult result;
    result.groups.resize(static_cast<std::size_t>(k + 6));
    for (int i = 1; i <= k + 6; ++i) {
        auto& group = result.groups[static_cast<std::size_t>(i - 1)];
        group.index = i;
        if (auto it = diagonals.find(i); it != diagonals.end()) group.members.push_back(it->second);
    }
    auto merge_in = [&](const FlatChain& c, int color) {
        auto& group = result.groups[static_cast<std::size_t>(color - 1)];
        for (auto& m : group.members)
            if (m.orientation == c.orientation && m.line == c.line) {
                m.points.insert(m.points.end(), c.points.begin(), c.points.end());
                canonicalize_chain(m.points);
                return;
            }
        group.members.push_back(c);
    };
    for (std::size_t i = 0; i < verticals.size(); ++i) merge_in(verticals[i], vcolor[i]);
    for (std::size_t i = 0; i < horizontals.size(); ++i) merge_in(horizontals[i], hcolor[i]);

    // Hook assignment and bad points per group.
    for (auto& group : result.groups) {
        std::map<int, std::vector<std::size_t>> hooks;  // hook vertex -> member ids
        for (std::size_t m = 0; m < group.members.size(); ++m) {
            std::set<int> met;
            for (const auto& p : group.members[m].points) {
                met.insert(p.x);
                met.insert(n + 2 - p.y);
            }
            for (int hx : met) hooks[hx].push_back(m);
        }
        std::map<int, std::size_t> assigned;  // common hook -> member id
        for (const auto& [hx, members] : hooks) {
            if (members.size() < 2) continue;
            bool found = false;
            for (std::size_t m : members) {
                const auto& chain = group.members[m];
                bool owns = (chain.orientation == ChainOrientation::Vertical && chain.line == hx) ||
                            (chain.orientation == ChainOrientation::Horizontal &&
                             chain.line == n + 2 - hx);
                if (owns) { assigned[hx] = m; found = true; break; }
            }
            if (!found) throw std::logic_error("common hook without resident chain");
        }
        for (std::size_t m = 0; m < group.members.size(); ++m) {
            for (const auto& p : group.members[m].points) {
                bool bad = false;
                std::size_t causer = 0;
                for (int hx : {p.x, n + 2 - p.y}) {
                    auto it = assigned.find(hx);
                    if (it != assigned.end() && it->second != m) {
                        bad = true;
                        causer = it->second;
                        break;
                    }
                }
                if (bad) {
                    const auto& cc = group.members[causer];
                    int tail = cc.orientation == ChainOrientation::Vertical ? cc.line
                                                                            : n + 2 - cc.line;
                    result.bad.points.push_back({p, group.index, cc.name(), tail});
                } else {
                    group.surviving_points.push_back(p);
                }
            }
        }
        canonicalize_chain(group.surviving_points);
    }
    return result;
}

std::vector<Part> cover_bad_points(const BadPointSet& bad, int n) {
    std::vector<Edge> edges;
    edges.reserve(bad.points.size());
    for (const auto& bp : bad.points) edges.push_back(point_to_edge(bp.point, n));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty()) return {};

    ForestPartition fp = forest_partition(edges);
    if (fp.forests.size() > 17)
        throw std::logic_error("bad-point graph needs more than 17 forests");
    std::vector<Part> parts;
    for (const auto& forest : fp.forests) {
        auto [even, odd] = split_forest_into_star_forests(forest);
        for (auto* half : {&even, &odd}) {
            if (half->empty()) continue;
            if (!is_star_forest(*half)) throw std::logic_error("star split failed");
            Part part;
            part.id = static_cast<int>(parts.size());
            part.edges = std::move(*half);
            std::sort(part.edges.begin(), part.edges.end());
            parts.push_back(std::move(part));
        }
    }
    if (parts.size() > 34) throw std::logic_error("bad-point cover exceeds 34 parts");
    return parts;
}

namespace {

// Union-queue layout of K_{m+1} from the flat cover of triangle m.
Layout flat_union_layout_for_triangle(int m, int k) {
    FlatCover cover = build_flat_chain_cover(m, k);
    GroupingResult grouping = group_chains(cover);

    Layout layout;
    layout.n = m + 1;
    layout.kind = LayoutKind::Queue;
    layout.variant = LayoutVariant::Union;
    for (const auto& group : grouping.groups) {
        if (group.surviving_points.empty()) continue;
        Part part;
        part.id = static_cast<int>(layout.parts.size());
        for (const auto& p : group.surviving_points)
            part.edges.push_back(point_to_edge(p, m));
        std::sort(part.edges.begin(), part.edges.end());
        layout.parts.push_back(std::move(part));
    }
    for (Part part : cover_bad_points(grouping.bad, m)) {
        part.id = static_cast<int>(layout.parts.size());
        layout.parts.push_back(std::move(part));
    }
    return layout;
}

// Drops vertices above new_n together with their edges.
Layout restrict_layout(const Layout& layout, int new_n) {
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

// Union-queue layout of K_n via the flat construction: triangle n-1 when that
// is even, otherwise build K_{n+1} on triangle n and delete the last vertex.
Layout flat_union_layout_for_graph(int graph_n) {
    int m = (graph_n - 1) % 2 == 0 ? graph_n - 1 : graph_n;
    int k = smallest_even_k_for_triangle(m);
    Layout layout = flat_union_layout_for_triangle(m, k);
    if (layout.n != graph_n) layout = restrict_layout(layout, graph_n);
    return layout;
}

Layout shift_layout(const Layout& layout, int offset, int new_n) {
    Layout out;
    out.n = new_n;
    out.kind = layout.kind;
    out.variant = layout.variant;
    for (const auto& part : layout.parts) {
        Part shifted;
        shifted.id = part.id;
        for (const Edge& e : part.edges) shifted.edges.emplace_back(e.a + offset, e.b + offset);
        out.parts.push_back(std::move(shifted));
    }
    return out;
}

bool triangle_flat_feasible(int m, int k) {
    return m % 2 == 0 && k % 2 == 0 && 3 * m >= 10 * k &&
           static_cast<long double>(k) >= kAlpha * (m + 1);
}

// Mid-range construction: reuse a nearby flat-feasible K_{n'}.
std::optional<Layout> footnote_layout(int n) {
    const int budget = union_queue_budget(n);
    // Larger n': build and delete trailing vertices.
    for (int np = n + (n % 2); np <= n + 40; np += 2) {
        int kp = smallest_even_k_for_triangle(np);
        if (!triangle_flat_feasible(np, kp) || kp + 40 > budget) continue;
        return restrict_layout(flat_union_layout_for_graph(np), n);
    }
    // Smaller n': attach up to two vertices at each end, plus two queues of
    // end stars (edges at opposite ends cross but never nest).
    for (int np = n - (n % 2); np >= n - 4; np -= 2) {
        int kp = smallest_even_k_for_triangle(np);
        if (np < 1 || !triangle_flat_feasible(np, kp) || kp + 42 > budget) continue;
        int d = n - np;
        int left = d - d / 2, right = d / 2;
        Layout layout = shift_layout(flat_union_layout_for_graph(np), left, n);

        std::vector<int> priority;
        if (left >= 1) priority.push_back(1);
        if (right >= 1) priority.push_back(n);
        if (left >= 2) priority.push_back(2);
        if (right >= 2) priority.push_back(n - 1);
        std::set<int> fresh(priority.begin(), priority.end());
        std::set<Edge> taken;
        std::vector<std::vector<Edge>> stars(priority.size());
        for (std::size_t s = 0; s < priority.size(); ++s) {
            int v = priority[s];
            for (int u = 1; u <= n; ++u) {
                if (u == v) continue;
                Edge e(u, v);
                if (fresh.count(u) == 0 && fresh.count(v) == 0) continue;
                if (taken.insert(e).second) stars[s].push_back(e);
            }
        }
        for (std::size_t q = 0; q < 2; ++q) {
            Part part;
            part.id = static_cast<int>(layout.parts.size());
            for (std::size_t s = q; s < stars.size(); s += 2)
                part.edges.insert(part.edges.end(), stars[s].begin(), stars[s].end());
            if (part.edges.empty()) continue;
            std::sort(part.edges.begin(), part.edges.end());
            if (!part_is_queue(part)) throw std::logic_error("attachment queue is invalid");
            layout.parts.push_back(std::move(part));
        }
        return layout;
    }
    return std::nullopt;
}

Layout as_union(Layout layout) {
    layout.variant = LayoutVariant::Union;
    return layout;
}

} // namespace

Layout build_union_queue_layout(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const int budget = union_queue_budget(n);
    Layout layout;
    if (n <= 56) {
        layout = as_union(elbow_queue_layout(n));
    } else if (n < 294) {
        if (auto found = footnote_layout(n)) {
            layout = std::move(*found);
        } else {
            layout = as_union(elbow_queue_layout(n));
        }
    } else {
        layout = flat_union_layout_for_graph(n);
    }
    if (static_cast<int>(layout.parts.size()) > budget)
        throw std::logic_error("union queue layout exceeds its budget");
    return layout;
}

namespace {

// Hooked family of the recursive cover (identical shape to the flat L-family).
std::vector<Chain> family_a(int n, int k) {
    std::vector<Chain> chains;
    for (int alpha = 1; alpha <= k; ++alpha) chains.push_back(diagonal_chain(alpha, n, k));
    return chains;
}

std::vector<Chain> family_b(int n, int k) {
    std::vector<Chain> chains;
    for (int beta = 1; beta <= n - 3 * k; ++beta) {
        Chain chain;
        int line = n + 1 - 2 * k - beta;
        for (int x = 1; x <= beta; ++x)
            if (in_triangle({x, line}, n)) chain.push_back({x, line});
        for (int y = 1; y <= beta; ++y)
            if (in_triangle({line, y}, n)) chain.push_back({line, y});
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::vector<Chain> family_c(int n, int k) {
    std::vector<Chain> chains;
    const int band = 4 * k - n - 1;  // |x - y| bound of the middle block
    for (int gamma = 1; gamma <= n - 3 * k; ++gamma) {
        std::set<TrianglePoint> pts;
        int line = k + 1 - gamma;
        for (int x = 1; x <= n - 3 * k + 2 - gamma; ++x)
            if (in_triangle({x, line}, n)) pts.insert({x, line});
        for (int sum = n - 2 * k + 2 - 2 * gamma; sum <= n - 2 * k + 3 - 2 * gamma; ++sum)
            for (int x = std::max(1, (sum - band + 1) / 2); x <= sum - 1; ++x) {
                TrianglePoint p{x, sum - x};
                if (in_triangle(p, n) && std::abs(p.x - p.y) <= band) pts.insert(p);
            }
        for (int y = 1; y <= n - 3 * k + 2 - gamma; ++y)
            if (in_triangle({line, y}, n)) pts.insert({line, y});
        chains.push_back(Chain(pts.begin(), pts.end()));
    }
    return chains;
}

} // namespace

std::vector<Chain> build_recursive_chain_cover(int n, int k) {
    if (n <= 0) return {};
    if (k <= 0) k = ceil_alpha_times(n + 1);
    if (n <= 8) return elbow_chains(n);
    if (static_cast<long double>(k) < kAlpha * (n + 1))
        throw std::invalid_argument("k below (1-1/sqrt(2))(n+1)");

    std::vector<Chain> chains = family_a(n, k);
    int rest = 0;  // uncovered sub-triangle side
    if (n < 3 * k) {
        rest = n - 2 * k;
    } else {
        auto b = family_b(n, k);
        auto c = family_c(n, k);
        chains.insert(chains.end(), b.begin(), b.end());
        chains.insert(chains.end(), c.begin(), c.end());
        rest = 4 * k - n;
    }

    OwnerGrid grid(n);
    for (std::size_t ci = 0; ci < chains.size(); ++ci) {
        Chain kept;
        for (const auto& p : chains[ci])
            if (grid.claim(p, static_cast<int>(ci))) kept.push_back(p);
        chains[ci] = std::move(kept);
    }
    // The uncovered region must be exactly the corner triangle T_rest.
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x + y <= n + 1; ++x) {
            bool uncovered = grid.owner[point_index({x, y}, n)] < 0;
            bool in_rest = x + y <= rest + 1;
            if (uncovered != in_rest)
                throw std::logic_error("recursive cover residue is not T_{n'}");
        }

    std::vector<Chain> sub = (n < 3 * k) ? elbow_chains(rest) : build_recursive_chain_cover(rest);
    chains.insert(chains.end(), sub.begin(), sub.end());
    std::erase_if(chains, [](const Chain& c) { return c.empty(); });
    for (auto& c : chains) {
        canonicalize_chain(c);
        if (!chain_is_valid(c)) throw std::logic_error("recursive cover produced invalid chain");
    }
    return chains;
}

Layout build_local_queue_layout(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n == 1) {
        Layout layout;
        layout.n = 1;
        return layout;
    }
    return chains_to_queue_layout(build_recursive_chain_cover(n - 1), n - 1);
}

} // namespace linlay

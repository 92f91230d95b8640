#include "linlay/forest.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace linlay {

namespace {

class ForestPacker {
  public:
    int add_vertex(int v) {
        auto [it, fresh] = vertex_id_.try_emplace(v, static_cast<int>(vertex_id_.size()));
        if (fresh) for (auto& a : adj_) a.emplace_back();
        return it->second;
    }

    void insert(const Edge& e) {
        int u = add_vertex(e.a), v = add_vertex(e.b);
        int idx = static_cast<int>(edges_.size());
        edges_.push_back(e);
        ends_.emplace_back(u, v);
        forest_of_.push_back(-1);

        for (int f = 0; f < static_cast<int>(adj_.size()); ++f)
            if (!connected(f, u, v)) { place(idx, f); return; }
        if (augment(idx)) return;

        adj_.emplace_back(std::vector<std::vector<std::pair<int, int>>>(vertex_id_.size()));
        place(idx, static_cast<int>(adj_.size()) - 1);
    }

    ForestPartition result() const {
        ForestPartition out;
        out.forests.resize(adj_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            out.forests[static_cast<std::size_t>(forest_of_[i])].push_back(edges_[i]);
        return out;
    }

  private:
    bool connected(int f, int u, int v) const { return !tree_path(f, u, v, nullptr); }

    // Returns true iff u and v are disconnected in forest f. When connected
    // and path != nullptr, fills it with the edge indices of the tree path.
    bool tree_path(int f, int u, int v, std::vector<int>* path) const {
        if (u == v) { if (path) path->clear(); return false; }
        std::vector<int> via(vertex_id_.size(), -1);  // edge used to reach vertex
        std::deque<int> queue{u};
        std::vector<char> seen(vertex_id_.size(), 0);
        seen[static_cast<std::size_t>(u)] = 1;
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            for (auto [nbr, eidx] : adj_[static_cast<std::size_t>(f)][static_cast<std::size_t>(w)]) {
                if (seen[static_cast<std::size_t>(nbr)]) continue;
                seen[static_cast<std::size_t>(nbr)] = 1;
                via[static_cast<std::size_t>(nbr)] = eidx;
                if (nbr == v) {
                    if (path) {
                        path->clear();
                        int cur = v;
                        while (cur != u) {
                            int ei = via[static_cast<std::size_t>(cur)];
                            path->push_back(ei);
                            auto [a, b] = ends_[static_cast<std::size_t>(ei)];
                            cur = (cur == a) ? b : a;
                        }
                    }
                    return false;
                }
                queue.push_back(nbr);
            }
        }
        return true;
    }

    void place(int idx, int f) {
        auto [u, v] = ends_[static_cast<std::size_t>(idx)];
        adj_[static_cast<std::size_t>(f)][static_cast<std::size_t>(u)].emplace_back(v, idx);
        adj_[static_cast<std::size_t>(f)][static_cast<std::size_t>(v)].emplace_back(u, idx);
        forest_of_[static_cast<std::size_t>(idx)] = f;
    }

    void remove(int idx) {
        int f = forest_of_[static_cast<std::size_t>(idx)];
        auto [u, v] = ends_[static_cast<std::size_t>(idx)];
        auto strip = [&](int w) {
            auto& lst = adj_[static_cast<std::size_t>(f)][static_cast<std::size_t>(w)];
            lst.erase(std::find_if(lst.begin(), lst.end(),
                                   [&](auto& p) { return p.second == idx; }));
        };
        strip(u);
        strip(v);
        forest_of_[static_cast<std::size_t>(idx)] = -1;
    }

    // Shortest augmenting exchange: BFS over edges that would have to be
    // vacated, on the static configuration, then apply the swap chain.
    bool augment(int root) {
        std::vector<int> parent(edges_.size(), -2);     // -2 unvisited, -1 root
        std::vector<int> dest_forest(edges_.size(), -1); // forest freed for parent
        parent[static_cast<std::size_t>(root)] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            auto [u, v] = ends_[static_cast<std::size_t>(cur)];
            for (int f = 0; f < static_cast<int>(adj_.size()); ++f) {
                if (f == forest_of_[static_cast<std::size_t>(cur)]) continue;
                std::vector<int> path;
                if (tree_path(f, u, v, &path)) {
                    // cur fits in forest f directly; unwind the chain.
                    int child = cur, target = f;
                    while (child != -1) {
                        if (forest_of_[static_cast<std::size_t>(child)] >= 0) remove(child);
                        place(child, target);
                        int up = parent[static_cast<std::size_t>(child)];
                        if (up >= 0) target = dest_forest[static_cast<std::size_t>(child)];
                        child = up;
                    }
                    return true;
                }
                for (int blocker : path) {
                    if (parent[static_cast<std::size_t>(blocker)] != -2) continue;
                    parent[static_cast<std::size_t>(blocker)] = cur;
                    dest_forest[static_cast<std::size_t>(blocker)] = f;
                    queue.push_back(blocker);
                }
            }
        }
        return false;
    }

    std::map<int, int> vertex_id_;
    std::vector<Edge> edges_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<int> forest_of_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> adj_;
};

void check_acyclic(const std::vector<Edge>& edges) {
    std::map<int, int> root;
    std::function<int(int)> find = [&](int v) {
        while (root[v] != v) { root[v] = root[root[v]]; v = root[v]; }
        return v;
    };
    for (const Edge& e : edges) {
        root.try_emplace(e.a, e.a);
        root.try_emplace(e.b, e.b);
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) throw std::invalid_argument("edge set contains a cycle");
        root[ra] = rb;
    }
}

} // namespace

ForestPartition forest_partition(const std::vector<Edge>& edges) {
    std::set<Edge> uniq(edges.begin(), edges.end());
    if (uniq.size() != edges.size())
        throw std::invalid_argument("duplicate edges in forest_partition input");
    ForestPacker packer;
    for (const Edge& e : edges) packer.insert(e);
    ForestPartition fp = packer.result();
    for (const auto& f : fp.forests) check_acyclic(f);
    return fp;
}

std::pair<std::vector<Edge>, std::vector<Edge>>
split_forest_into_star_forests(const std::vector<Edge>& forest) {
    check_acyclic(forest);
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : forest) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::map<int, int> depth;
    for (const auto& [start, _] : adj) {
        if (depth.count(start)) continue;
        depth[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (!depth.count(w)) {
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
        }
    }
    std::pair<std::vector<Edge>, std::vector<Edge>> out;
    for (const Edge& e : forest) {
        int top_depth = std::min(depth[e.a], depth[e.b]);
        (top_depth % 2 == 0 ? out.first : out.second).push_back(e);
    }
    return out;
}

bool is_star_forest(const std::vector<Edge>& edges) {
    std::map<int, int> root;
    std::function<int(int)> find = [&](int v) {
        while (root[v] != v) { root[v] = root[root[v]]; v = root[v]; }
        return v;
    };
    for (const Edge& e : edges) {
        root.try_emplace(e.a, e.a);
        root.try_emplace(e.b, e.b);
        root[find(e.a)] = find(e.b);
    }
    std::map<int, std::vector<Edge>> comps;
    for (const Edge& e : edges) comps[find(e.a)].push_back(e);
    for (const auto& [r, comp] : comps) {
        if (comp.size() <= 1) continue;
        std::map<int, std::size_t> degree;
        for (const Edge& e : comp) { degree[e.a]++; degree[e.b]++; }
        bool has_center = false;
        for (const auto& [v, d] : degree)
            if (d == comp.size()) has_center = true;
        if (!has_center) return false;
    }
    return true;
}

int nash_williams_bound_exhaustive(const std::vector<Edge>& edges) {
    if (edges.empty()) return 0;
    std::vector<int> verts;
    for (const Edge& e : edges) { verts.push_back(e.a); verts.push_back(e.b); }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() > 22)
        throw std::invalid_argument("exhaustive density bound limited to 22 vertices");
    std::map<int, int> id;
    for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = static_cast<int>(i);

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(edges.size());
    for (const Edge& e : edges)
        edge_masks.push_back((1u << id[e.a]) | (1u << id[e.b]));

    int best = 1;
    const std::uint32_t limit = 1u << verts.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        int nv = std::popcount(mask);
        if (nv < 2) continue;
        int ne = 0;
        for (std::uint32_t em : edge_masks)
            if ((em & mask) == em) ++ne;
        if (ne == 0) continue;
        best = std::max(best, (ne + nv - 2) / (nv - 1));
    }
    return best;
}

} // namespace linlay

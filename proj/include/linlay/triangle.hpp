#ifndef LINLAY_TRIANGLE_HPP
#define LINLAY_TRIANGLE_HPP

#include <compare>
#include <vector>

#include "linlay/layout.hpp"

namespace linlay {

/// A point of the triangular grid T_n = { (x,y) : x,y >= 1, x+y <= n+1 },
/// whose points are in bijection with the edges of K_{n+1}.
struct TrianglePoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const TrianglePoint&) const = default;
};

/// A weakly monotonically decreasing staircase of points, i.e. an antichain
/// in the strict dominance order. Queues of K_{n+1} map to exactly these.
using Chain = std::vector<TrianglePoint>;

inline bool in_triangle(const TrianglePoint& p, int n) {
    return p.x >= 1 && p.y >= 1 && p.x + p.y <= n + 1;
}

inline long long triangle_size(int n) {
    return static_cast<long long>(n) * (n + 1) / 2;
}

/// Edge v_i v_j of K_{n+1} (i > j) maps to (j, n+2-i).
TrianglePoint edge_to_point(const Edge& e, int n);

/// Inverse of edge_to_point: (x,y) maps to edge {v_x, v_{n+2-y}}.
Edge point_to_edge(const TrianglePoint& p, int n);

/// Column i union row n+2-i of T_n: the footprint of vertex v_i. Every hook
/// has exactly n points (the degree of v_i in K_{n+1}).
std::vector<TrianglePoint> hook_of_vertex(int i, int n);

/// True iff no point strictly dominates another (both coordinates larger).
bool chain_is_valid(const Chain& chain);

/// Sorts points by x ascending, ties y descending (canonical chain storage).
void canonicalize_chain(Chain& chain);

/// Maps chains that partition T_n to a plain queue layout of K_{n+1},
/// one part per chain. Throws if the chains are not a valid partition.
Layout chains_to_queue_layout(const std::vector<Chain>& chains, int n);

/// Max over hooks of the number of chains met; equals the max locality of
/// chains_to_queue_layout. Chains must consist of points of T_n.
int max_hook_chain_incidence(const std::vector<Chain>& chains, int n);

} // namespace linlay

#endif

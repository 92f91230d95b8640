#ifndef LINLAY_PAGE_BUILDERS_HPP
#define LINLAY_PAGE_BUILDERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "linlay/layout.hpp"

namespace linlay {

/// A small labeled vertex/edge pattern instantiated by rotation. Vertex
/// indices are absolute (1-based) positions before rotation; rotating by
/// offset i-1 maps vertex 1 to vertex i (indices wrap modulo n).
struct Gadget {
    std::string name;           // "O", "G", "H", "S", "T", "matching"
    int t = 0;                  // rotation-family parameter
    std::vector<int> vertices;  // sorted, deduplicated
    std::vector<Edge> edges;
};

/// Book embedding of K_n into ceil(n/2) crossing-free pages; page p is the
/// zigzag path p, p+1, p-1, p+2, p-2, ... with each edge kept on its
/// lowest-p page.
Layout zigzag_page_layout(int n);

/// Outerplanar gadget O(t) of the local-page construction for n = 18k-3:
/// 7 edges on 5 vertices at t = 0, 9 edges on 6 vertices for t > 0; the edge
/// lengths over t = 0..k-1 realize 1..9k-2 exactly once each.
Gadget local_page_gadget(int k, int t);

/// Plain page layout of K_n with max locality <= n/3 + 4. For n = 18k-3 this
/// is the rotated-gadget partition into n*k pages with locality 6k-1
/// everywhere; other n take the better of star padding and shrinking from the
/// next exact size.
Layout build_local_page_layout(int n);

/// Gadgets G(t) (7 edges on 5 vertices) and H(t) (a single edge) of the
/// union-page construction for n = 18k, k divisible by 3; their lengths over
/// t = 0..k-1 realize [k,3k] and [4k+1,9k].
std::pair<Gadget, Gadget> union_page_gadgets(int k, int t);

/// Union-page layout of K_n with at most 4n/9 + 18 parts; exactly 4n/9 + 4
/// parts when n = 18k with k divisible by 3.
Layout build_union_page_layout(int n);

} // namespace linlay

#endif

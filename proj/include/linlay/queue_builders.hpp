#ifndef LINLAY_QUEUE_BUILDERS_HPP
#define LINLAY_QUEUE_BUILDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "linlay/forest.hpp"
#include "linlay/layout.hpp"
#include "linlay/triangle.hpp"

namespace linlay {

enum class ChainFamilyTag { L, A, B, C, D, E, F, G };
enum class ChainOrientation { Diagonal, Vertical, Horizontal };

/// One chain of the flat cover of T_n, tagged with the family that defined it.
struct FlatChain {
    ChainFamilyTag family = ChainFamilyTag::L;
    bool primed = false;   // reflected family (A'..G')
    bool hatted = false;   // wrapped continuation (hat-A, hat-B, hat-C)
    int index = 0;         // 1-based index within the family
    ChainOrientation orientation = ChainOrientation::Diagonal;
    int line = 0;          // column (vertical) or row (horizontal) index
    Chain points;

    std::string name() const;
    // Interval of y-coordinates (vertical) or x-coordinates (horizontal).
    std::pair<int, int> interval() const;
};

/// The flat chain cover of T_n from the union-queue upper-bound construction:
/// k diagonal L-chains plus the vertical families A..G and their reflections.
struct FlatCover {
    int n = 0;
    int k = 0;
    std::vector<FlatChain> chains;
};

/// A group of chains destined to become one union chain: L_i (for i <= k)
/// plus vertical and horizontal chains colored i.
struct ChainGroup {
    int index = 0;               // i in 1..k+6
    std::vector<FlatChain> members;   // same-column/row members already merged
    Chain surviving_points;      // union of members minus bad points
};

/// Points removed from chain groups because their hook was assigned to a
/// different chain, with the causing chain and the induced edge orientation.
struct BadPointSet {
    struct BadPoint {
        TrianglePoint point;
        int group = 0;
        std::string caused_by;   // name of the assigned chain
        int tail_vertex = 0;     // vertex the induced edge is oriented away from
    };
    std::vector<BadPoint> points;
};

struct GroupingResult {
    std::vector<ChainGroup> groups;  // exactly k+6 entries, some possibly empty
    BadPointSet bad;
};

/// Queue layout of K_n from nested L-shaped antichains: exactly floor(n/2)
/// parts, exact cover.
Layout elbow_queue_layout(int n);

/// Elbow chains covering T_m (floor((m+1)/2) of them).
std::vector<Chain> elbow_chains(int m);

/// Flat chain cover of T_n. Requires n and k even, k >= (1-1/sqrt(2))(n+1),
/// and 3n >= 10k. Double-covered points go to the earliest family in the
/// order L, A..G, A'..G', lowest index first.
FlatCover build_flat_chain_cover(int n, int k);

/// Partitions the flat cover into k+6 groups by greedy interval coloring,
/// assigns common hooks, and extracts bad points.
GroupingResult group_chains(const FlatCover& cover);

/// Covers the bad-point edges with at most 34 star-forest parts
/// (forest partition of the induced graph, each forest split in two).
std::vector<Part> cover_bad_points(const BadPointSet& bad, int n);

/// Union-queue layout of K_n with at most ceil((1-1/sqrt(2))(n+1)) + 42 parts.
Layout build_union_queue_layout(int n);

/// Chains partitioning T_n such that no hook meets more than k+1 of them,
/// k = ceil((1-1/sqrt(2))(n+1)) when not supplied.
std::vector<Chain> build_recursive_chain_cover(int n, int k = 0);

/// Plain queue layout of K_n with max locality <= ceil((1-1/sqrt(2)) n) + 1.
Layout build_local_queue_layout(int n);

/// Budget helpers shared with the CLI and the acceptance suite.
int union_queue_budget(int n);
int local_queue_budget(int n);
int smallest_even_k_for_triangle(int n);

} // namespace linlay

#endif

#ifndef LINLAY_LAYOUT_HPP
#define LINLAY_LAYOUT_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linlay {

/// An edge of K_n, stored normalized with a < b (1-based vertex indices).
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
        if (u == v) throw std::invalid_argument("edge endpoints must differ");
        if (a < 1) throw std::invalid_argument("edge endpoints must be >= 1");
    }

    auto operator<=>(const Edge&) const = default;
};

enum class Relation { SharedEndpoint, Nested, Crossing, DisjointOrdered };

enum class LayoutKind { Queue, Page };
enum class LayoutVariant { Plain, Union };

/// One part of the edge partition (a queue, page, union queue, or union page).
struct Part {
    int id = 0;
    std::vector<Edge> edges;
};

/// A linear layout of K_n with the identity vertex ordering v_1 < ... < v_n.
struct Layout {
    int n = 0;
    LayoutKind kind = LayoutKind::Queue;
    LayoutVariant variant = LayoutVariant::Plain;
    std::vector<Part> parts;

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& p : parts) m += p.edges.size();
        return m;
    }
};

struct VerificationReport {
    std::vector<bool> part_valid;       // parallel to layout.parts
    std::vector<int> locality;          // per vertex, 1-based at index i-1
    int max_locality = 0;
    bool covered = false;               // every edge of K_n in exactly one part
    int part_count = 0;                 // nonempty parts
    bool all_parts_valid = true;

    bool ok() const { return all_parts_valid && covered; }
};

/// Per-vertex counting data from the queue lower-bound argument.
struct QueueStatistics {
    std::vector<int> left_longest;   // l_i: queues with a left-longest edge ending at v_i
    std::vector<int> right_shortest; // r_i: queues with a right-shortest edge starting at v_i
    std::vector<int> both_sided;     // b_i: queues with edges on both sides of v_i
};

/// Per-part hull/edge classification from the page lower-bound argument.
struct PagePartStatistics {
    int part_id = 0;
    std::vector<int> hull_vertices;        // V_P sorted ascending
    std::vector<Edge> black_edges;         // hull edges in P
    std::vector<Edge> red_edges;           // hull edges not in P
    std::vector<Edge> green_edges;         // inner edges of P
    long long hull_length_sum = 0;         // sum of circular forward-edge lengths (= n)
};

struct PageStatistics {
    std::vector<PagePartStatistics> parts;
    std::vector<int> red_forward;    // r_v per vertex
    std::vector<int> black_forward;  // b_v per vertex
    long long total_red = 0;         // R
    long long total_black = 0;       // B
    int skipped_parts = 0;           // parts with fewer than two vertices

    long long red_edge_count() const {
        long long c = 0;
        for (const auto& p : parts) c += static_cast<long long>(p.red_edges.size());
        return c;
    }
};

/// Classifies an edge pair: shared endpoint, nested (ABBA), crossing (ABAB),
/// or disjoint-ordered (AABB).
Relation edge_relation(const Edge& e, const Edge& f);

bool part_is_queue(const Part& part);
bool part_is_page(const Part& part);
bool part_is_union_queue(const Part& part);
bool part_is_union_page(const Part& part);

/// Number of parts with at least one edge incident to each vertex.
std::vector<int> locality_profile(const Layout& layout);

/// Checks every part against the layout's kind/variant predicate, the
/// exact-cover condition, and computes the locality profile. Malformed edge
/// indices or an edge appearing in two parts raise std::invalid_argument.
VerificationReport verify_layout(const Layout& layout);

/// Requires a valid plain queue layout with exact cover. Also asserts the
/// left-longest-or-right-shortest totality and l_i + r_i - b_i = locality(v_i).
QueueStatistics queue_statistics(const Layout& layout);

/// Requires a valid plain page layout with exact cover. Hulls are taken on the
/// circularly closed spine. Asserts sum_P |V_P| = R + B and per-part hull
/// length sums of n.
PageStatistics page_statistics(const Layout& layout);

std::string to_string(LayoutKind kind);
std::string to_string(LayoutVariant variant);

} // namespace linlay

#endif

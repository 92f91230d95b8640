#ifndef LINLAY_FOREST_HPP
#define LINLAY_FOREST_HPP

#include <vector>

#include "linlay/layout.hpp"

namespace linlay {

/// A partition of a simple graph's edge set into acyclic edge sets.
struct ForestPartition {
    std::vector<std::vector<Edge>> forests;
};

/// Partitions the edges into the minimum number of forests (the Nash-Williams
/// arboricity), by incremental insertion with augmenting exchange sequences.
ForestPartition forest_partition(const std::vector<Edge>& edges);

/// Splits an acyclic edge set into two star forests by rooting each tree and
/// assigning every edge by the depth parity of its upper endpoint.
/// Throws on cyclic input.
std::pair<std::vector<Edge>, std::vector<Edge>>
split_forest_into_star_forests(const std::vector<Edge>& forest);

/// True iff every connected component is a star (or an isolated edge).
bool is_star_forest(const std::vector<Edge>& edges);

/// Nash-Williams density bound max over subgraphs ceil(|E(H)| / (|V(H)|-1)),
/// computed by exhaustive enumeration of vertex subsets. Intended as a test
/// oracle for graphs with few vertices.
int nash_williams_bound_exhaustive(const std::vector<Edge>& edges);

} // namespace linlay

#endif

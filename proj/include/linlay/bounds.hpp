#ifndef LINLAY_BOUNDS_HPP
#define LINLAY_BOUNDS_HPP

#include <optional>
#include <string>

#include "linlay/layout.hpp"

namespace linlay {

/// Closed-form bound values for K_n. Strict lower bounds are real numbers;
/// the implied integer bound is floor(value) + 1.
struct BoundTable {
    int n = 0;
    double lqn_lower_strict = 0;  // (1-1/sqrt(2)) n - (9-4 sqrt(2))/16
    int lqn_lower = 0;            // smallest integer strictly above
    int lqn_upper = 0;            // ceil((1-1/sqrt(2)) n) + 1
    int uqn_upper = 0;            // ceil((1-1/sqrt(2)) (n+1)) + 42
    double lpn_lower_strict = 0;  // n/3 - 1
    int lpn_lower = 0;
    int lpn_upper = 0;            // floor(n/3 + 4)
    int upn_upper = 0;            // floor(4n/9 + 18)
    int qn = 0;                   // floor(n/2)
    int pn = 0;                   // ceil(n/2)
    double density_lower = 0;     // (n-1)/4
};

enum class LayoutParameter { LocalQueue, LocalPage, UnionQueue, UnionPage };

/// Result of the exhaustive search for the exact layout parameter of K_n.
struct ExactResult {
    int n = 0;
    LayoutParameter parameter = LayoutParameter::LocalQueue;
    int value = 0;
    Layout witness;           // verified layout achieving value
    long long nodes_explored = 0;
};

BoundTable evaluate_bounds(int n);

/// Exhaustive backtracking over edge-to-part assignments in lexicographic
/// edge order, with part-symmetry breaking and locality pruning. Returns the
/// witness on success. The default caps are 7 (plain) and 6 (union) vertices;
/// cap_override opts into larger n with a stderr warning.
std::optional<Layout> exists_k_local_layout(int n, int k, LayoutKind kind, LayoutVariant variant,
                                            int cap_override = 0,
                                            long long* nodes_out = nullptr,
                                            bool reverse_edge_order = false);

/// Minimal k for which a k-local layout of the given kind/variant exists.
ExactResult exact_number(int n, LayoutParameter parameter, int cap_override = 0);

std::string to_string(LayoutParameter parameter);
std::optional<LayoutParameter> parse_parameter(const std::string& text);

} // namespace linlay

#endif

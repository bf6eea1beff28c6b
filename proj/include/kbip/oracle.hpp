// Exhaustive ground truth for small instances.
//
// Nothing here uses the closed forms or the constructions; it enumerates
// trees of an explicit graph and searches for the largest compatible family.

#ifndef KBIP_ORACLE_HPP
#define KBIP_ORACLE_HPP

#include <stdexcept>
#include <utility>
#include <vector>

namespace kbip::oracle {

class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSteinerVertices = 10;
inline constexpr int kMaxSpanningEdges = 20;
inline constexpr int kMaxKappaVertices = 8;

/// A simple undirected graph on vertices 0..vertex_count-1.
struct SmallGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    /// x_j is vertex j-1, y_j is vertex a+j-1.
    static SmallGraph complete_bipartite(int a, int b);
    static SmallGraph complete(int n);
};

struct OracleResult {
    int count = 0;
    // One optimal family; each tree is a list of indices into graph.edges.
    // It is the lexicographically least optimal family in enumeration order,
    // so it depends only on the instance.
    std::vector<std::vector<int>> trees;
};

/// Largest set of edge-disjoint trees, each containing every vertex of
/// `terminals`, whose pairwise vertex intersections are exactly
/// `terminals`. Throws InstanceTooLarge above kMaxSteinerVertices vertices.
OracleResult max_tree_set(const SmallGraph& graph, const std::vector<int>& terminals);

/// Largest set of pairwise edge-disjoint spanning trees of K_{a,b}.
/// Throws InstanceTooLarge when ab > kMaxSpanningEdges.
int spanning_packing(int a, int b);

/// kappa_k(K_{a,b}) as the minimum of max_tree_set over the canonical
/// terminal sets. Throws InstanceTooLarge when a + b > kMaxKappaVertices.
int kappa_k(int a, int b, int k);

/// x_1..x_i and y_1..y_{k-i} as vertex numbers of complete_bipartite(a, b).
std::vector<int> canonical_terminals(int a, int k, int i);

}  // namespace kbip::oracle

#endif  // KBIP_ORACLE_HPP

// Closed-form generalized connectivity of complete and complete bipartite
// graphs, and the per-terminal-set tree counts behind it.

#ifndef KBIP_CONNECTIVITY_HPP
#define KBIP_CONNECTIVITY_HPP

#include "kbip/bipartite_core.hpp"

#include <optional>

namespace kbip {

/// How a maximum set of internally disjoint trees connecting S_i splits by
/// shape. a2 trees use one spare vertex from each side, a1 trees one spare
/// vertex from `a1_side`, and a0 trees only the terminals.
struct KappaBreakdown {
    int a2 = 0;
    int a1 = 0;
    std::optional<Side> a1_side;  // empty when a1 == 0
    int a0 = 0;
    int kappa = 0;

    friend bool operator==(const KappaBreakdown&, const KappaBreakdown&) = default;
};

/// Internal edges (both ends in S_i) consumed by one a1 tree whose extra
/// vertex lies on `side`: every same-side terminal hangs off one of them.
int a1_internal_cost(const TerminalSet& terminal, Side side);

/// kappa_k(K_n) = n - ceil(k/2) for 2 <= k <= n.
int kappa_complete(int n, int k);

/// kappa(S_i) in K_{a,b}.
///
/// Spare-vertex pairs are spent first (one a2 tree each). Leftover spares on
/// the longer side become a1 trees, limited by the internal edges at the
/// same-side terminals. Remaining internal edges are packed into a0 trees of
/// k - 1 edges each. One-sided sets (i = 0 or i = k) are stars around the
/// opposite side.
KappaBreakdown kappa_terminal(const BipartiteOrder& order, int k, int i);

/// kappa_k(K_{a,b}) for 2 <= k <= a + b.
int kappa_bipartite(const BipartiteOrder& order, int k);

/// Smallest i attaining kappa_bipartite. The minimizer is not unique in
/// general, so this is a scan rather than a formula.
int min_terminal_index(const BipartiteOrder& order, int k);

}  // namespace kbip

#endif  // KBIP_CONNECTIVITY_HPP

// Explicit maximum sets of internally disjoint trees connecting S_i.
//
// Every tree built here has one of three shapes:
//   A0  vertex set S_i exactly (uses only internal edges);
//   A1  one spare vertex u, joined to every opposite-side terminal, with each
//       same-side terminal hung off a single internal edge;
//   A2  spare u in X and v in Y: u joined to all Y terminals, v to all X
//       terminals, plus the edge uv.
// Restricting to these shapes loses nothing: any tree connecting S_i can be
// rewritten into one of them without touching the other trees.

#ifndef KBIP_WITNESS_BUILDER_HPP
#define KBIP_WITNESS_BUILDER_HPP

#include "kbip/bipartite_core.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace kbip {

enum class TreeClass : std::uint8_t { A0, A1, A2 };

std::string_view to_string(TreeClass c) noexcept;
std::optional<TreeClass> parse_tree_class(std::string_view text) noexcept;

struct ClassifiedTree {
    Tree tree;
    TreeClass tree_class = TreeClass::A0;
    std::vector<VertexId> extras;  // the non-terminal vertices, 0 to 2 of them
};

struct SteinerWitness {
    TerminalSet terminal;
    std::vector<ClassifiedTree> trees;
};

/// Unused internal edges of S_i, tracked per terminal. Starts with every
/// X terminal holding k - i edges and every Y terminal holding i.
class ResidualLedger {
public:
    explicit ResidualLedger(const TerminalSet& terminal);

    int capacity(Side side, int terminal) const;
    int min_capacity(Side side) const;
    bool available(const Edge& e) const;

    // Throws ConstructionBug if e is not internal or is already used.
    void consume(const Edge& e);

    /// The unused internal edge at `terminal` whose other end has the lowest
    /// index, marked as used. Empty when the terminal has none left.
    std::optional<Edge> take_lowest(Side side, int terminal);

private:
    std::size_t slot(const Edge& e) const;

    int x_terminals_;
    int y_terminals_;
    std::vector<bool> used_;
    std::vector<int> x_capacity_;
    std::vector<int> y_capacity_;
};

/// `count` A2 trees pairing spare vertices in index order:
/// x_{i+1} with y_{k-i+1}, x_{i+2} with y_{k-i+2}, ...
std::vector<ClassifiedTree> build_a2_trees(const BipartiteOrder& order, const TerminalSet& terminal, int count);

/// p A0 trees followed by q A1 trees with extras on `side`, all pairwise
/// edge-disjoint. The A0 trees are shifted spanning trees of the internal
/// K_{i,k-i} whose degree sequence sits on `side`, which leaves at least q
/// unused internal edges at every terminal on that side. Each A1 tree then
/// takes its attachment edges from what is left, lowest index first.
///
/// `skip_spares` spare vertices on `side` (the lowest-indexed ones) are
/// treated as taken, e.g. by A2 trees built earlier.
std::vector<ClassifiedTree> build_internal_trees(const BipartiteOrder& order, const TerminalSet& terminal,
                                                 int p, int q, Side side, int skip_spares = 0);

/// A maximum internally disjoint set of trees connecting S_i, of size
/// kappa_terminal(order, k, i).kappa: as many A2 trees as spare pairs allow,
/// then A1, then A0.
SteinerWitness build_witness(const BipartiteOrder& order, int k, int i);

/// Reports the first of: wrong-terminals (S_i invalid for this order),
/// bad-tree (a tree fails validate_tree against S_i), edge-overlap, or
/// vertex-overlap (two trees share a vertex outside S_i).
ValidationReport verify_witness(const BipartiteOrder& order, const SteinerWitness& witness);

}  // namespace kbip

#endif  // KBIP_WITNESS_BUILDER_HPP

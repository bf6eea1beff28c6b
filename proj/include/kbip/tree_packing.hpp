// Edge-disjoint spanning trees of K_{a,b} from shifted adjacency-degree lists.
//
// A spanning tree is described by a degree sequence d_1..d_a for the X side:
// x_j is joined to a run of d_j cyclically consecutive Y vertices, and each
// run starts where the previous one ended. Shifting the runs produces further
// trees; the first t shifts are pairwise edge-disjoint exactly when every
// cyclic window d_j + ... + d_{j+t-1} fits in b.

#ifndef KBIP_TREE_PACKING_HPP
#define KBIP_TREE_PACKING_HPP

#include "kbip/bipartite_core.hpp"

#include <vector>

namespace kbip {

struct DegreeSequence {
    std::vector<int> degrees;  // d_1..d_a, stored 0-based
    std::vector<int> anchors;  // i_0..i_a with i_0 = 1 and i_a = b
    int quotient = 0;          // a + b - 1 = quotient * a + remainder
    int remainder = 0;
    int shift = 0;             // the t the residue ordering was built for

    int size() const noexcept { return static_cast<int>(degrees.size()); }
    // 1-based and cyclic: degree(a + 1) == degree(1).
    int degree(int j) const;
};

struct SpanningTreePacking {
    BipartiteOrder order;
    std::vector<Tree> trees;
};

/// floor(ab / (a + b - 1)); at least 1 for positive sizes.
int target_tree_count(int a, int b);

/// Orders {1..a} as r, r+t, ..., r+(j-1)t (mod a) for r = 1..a/j, where
/// j = a / gcd(a, t) is the length of each additive orbit.
std::vector<int> residue_ordering(int a, int t);

/// Degrees in {q, q+1} summing to a + b - 1, with the q+1 entries placed on
/// the first r positions of residue_ordering(a, t).
///
/// Any a, b >= 1 is accepted. With a > b every degree is 1 or 2; the
/// internal-edge packing of the witness builder relies on that case.
DegreeSequence degree_sequence(int a, int b, int t);

/// Cyclic window sum d_j + ... + d_{j+t-1} for 1 <= j <= a.
int window_sum(const DegreeSequence& dseq, int j, int t);

/// True iff every cyclic window of length t fits in b.
bool verify_shift_capacity(const DegreeSequence& dseq, int b, int t);

/// The ell-th shifted tree. Row j of the list gives x_j the
/// d_{ell+j-1} cyclic positions starting where row j-1 ended; row 1 starts
/// at i_{ell-1} + ell - 1. Throws NotConstructible when the first ell
/// shifts do not fit in b.
Tree build_tree(const DegreeSequence& dseq, int b, int ell);

/// The first `count` shifted trees over a degree sequence built for
/// t = count. Sides may be given in either order (a > b allowed).
/// Throws NotConstructible when count exceeds target_tree_count(a, b).
std::vector<Tree> build_shifted_trees(int a, int b, int count);

/// A maximum packing: target_tree_count(a, b) pairwise edge-disjoint
/// spanning trees.
SpanningTreePacking build_packing(const BipartiteOrder& order);

}  // namespace kbip

#endif  // KBIP_TREE_PACKING_HPP

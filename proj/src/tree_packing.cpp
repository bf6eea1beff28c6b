#include "kbip/tree_packing.hpp"

#include <numeric>
#include <string>

namespace kbip {

namespace {

// Reduces any integer into {1..n}.
int wrap(long long position, int n)
{
    const long long r = ((position - 1) % n + n) % n;
    return static_cast<int>(r) + 1;
}

}  // namespace

int DegreeSequence::degree(int j) const { return degrees[static_cast<std::size_t>(wrap(j, size()) - 1)]; }

int target_tree_count(int a, int b)
{
    if (a < 1 || b < 1)
        throw InvalidArgument("side sizes must be positive");
    const long long edges = static_cast<long long>(a) * b;
    return static_cast<int>(edges / (static_cast<long long>(a) + b - 1));
}

std::vector<int> residue_ordering(int a, int t)
{
    if (a < 1 || t < 1)
        throw InvalidArgument("residue_ordering needs a >= 1 and t >= 1");
    const int orbit = a / std::gcd(a, t);
    const long long step = t % a;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(a));
    for (int start = 1; start <= a / orbit; ++start)
        for (long long m = 0; m < orbit; ++m)
            out.push_back(wrap(start + m * step, a));
    return out;
}

DegreeSequence degree_sequence(int a, int b, int t)
{
    if (a < 1 || b < 1)
        throw InvalidArgument("degree_sequence needs positive side sizes");
    DegreeSequence dseq;
    dseq.shift = t;
    dseq.quotient = (a + b - 1) / a;
    dseq.remainder = (a + b - 1) % a;
    dseq.degrees.assign(static_cast<std::size_t>(a), dseq.quotient);

    const std::vector<int> ordering = residue_ordering(a, t);
    for (int n = 0; n < dseq.remainder; ++n)
        ++dseq.degrees[static_cast<std::size_t>(ordering[static_cast<std::size_t>(n)] - 1)];

    dseq.anchors.reserve(static_cast<std::size_t>(a) + 1);
    dseq.anchors.push_back(1);
    for (int d : dseq.degrees)
        dseq.anchors.push_back(dseq.anchors.back() + d - 1);
    if (dseq.anchors.back() != b)
        throw ConstructionBug("anchor chain ends at " + std::to_string(dseq.anchors.back()) +
                              " instead of b = " + std::to_string(b));
    return dseq;
}

int window_sum(const DegreeSequence& dseq, int j, int t)
{
    if (j < 1 || j > dseq.size() || t < 1)
        throw InvalidArgument("window_sum needs 1 <= j <= a and t >= 1");
    int total = 0;
    for (int n = 0; n < t; ++n)
        total += dseq.degree(j + n);
    return total;
}

bool verify_shift_capacity(const DegreeSequence& dseq, int b, int t)
{
    for (int j = 1; j <= dseq.size(); ++j)
        if (window_sum(dseq, j, t) > b)
            return false;
    return true;
}

Tree build_tree(const DegreeSequence& dseq, int b, int ell)
{
    if (ell < 1)
        throw InvalidArgument("tree index must be at least 1");
    if (dseq.anchors.empty() || dseq.anchors.back() != b)
        throw InvalidArgument("degree sequence was not built for b = " + std::to_string(b));
    if (!verify_shift_capacity(dseq, b, ell))
        throw NotConstructible("shift " + std::to_string(ell) + " overlaps an earlier tree: some window of " +
                               std::to_string(ell) + " degrees exceeds b = " + std::to_string(b));

    // ell <= a here: a window of a + 1 degrees sums to at least a + b > b.
    const int a = dseq.size();
    Tree tree;
    tree.edges.reserve(static_cast<std::size_t>(a + b - 1));
    long long position = dseq.anchors[static_cast<std::size_t>(ell - 1)] + (ell - 1);
    for (int row = 1; row <= a; ++row) {
        const int run = dseq.degree(ell + row - 1);
        for (int n = 0; n < run; ++n)
            tree.edges.push_back({row, wrap(position + n, b)});
        position += run - 1;
    }
    return tree;
}

std::vector<Tree> build_shifted_trees(int a, int b, int count)
{
    if (count < 0)
        throw InvalidArgument("tree count must be non-negative");
    if (count == 0)
        return {};
    if (count > target_tree_count(a, b))
        throw NotConstructible(std::to_string(count) + " spanning trees do not fit in K_{" + std::to_string(a) +
                               "," + std::to_string(b) + "}");
    const DegreeSequence dseq = degree_sequence(a, b, count);
    if (!verify_shift_capacity(dseq, b, count))
        throw ConstructionBug("window sums exceed b at t = " + std::to_string(count));
    std::vector<Tree> trees;
    trees.reserve(static_cast<std::size_t>(count));
    for (int ell = 1; ell <= count; ++ell)
        trees.push_back(build_tree(dseq, b, ell));
    return trees;
}

SpanningTreePacking build_packing(const BipartiteOrder& order)
{
    return {order, build_shifted_trees(order.a(), order.b(), target_tree_count(order.a(), order.b()))};
}

}  // namespace kbip

#include "kbip/tree_packing.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace kbip;

namespace {

std::vector<std::vector<int>> rows(const Tree& tree, int a)
{
    // Neighbors of each x in edge order, which for shifted trees is arc order.
    std::vector<std::vector<int>> out(static_cast<std::size_t>(a));
    for (const Edge& e : tree.edges)
        out[static_cast<std::size_t>(e.x - 1)].push_back(e.y);
    return out;
}

}  // namespace

TEST_CASE("target_tree_count")
{
    CHECK(target_tree_count(3, 3) == 1);
    CHECK(target_tree_count(3, 4) == 2);
    CHECK(target_tree_count(5, 6) == 3);
    for (int b = 1; b <= 30; ++b)
        CHECK(target_tree_count(1, b) == 1);
}

TEST_CASE("residue_ordering")
{
    CHECK(residue_ordering(5, 2) == std::vector<int>{1, 3, 5, 2, 4});
    CHECK(residue_ordering(4, 2) == std::vector<int>{1, 3, 2, 4});
    CHECK(residue_ordering(6, 4) == std::vector<int>{1, 5, 3, 2, 6, 4});
    for (int a = 1; a <= 9; ++a) {
        std::vector<int> ident(static_cast<std::size_t>(a));
        std::iota(ident.begin(), ident.end(), 1);
        CHECK(residue_ordering(a, 1) == ident);
    }
}

TEST_CASE("residue_ordering is a permutation starting at 1")
{
    for (int a = 1; a <= 60; ++a)
        for (int t = 1; t <= 60; ++t) {
            std::vector<int> order = residue_ordering(a, t);
            REQUIRE(order.size() == static_cast<std::size_t>(a));
            CHECK(order.front() == 1);
            std::sort(order.begin(), order.end());
            for (int j = 0; j < a; ++j)
                CHECK(order[static_cast<std::size_t>(j)] == j + 1);
        }
}

TEST_CASE("degree_sequence")
{
    const DegreeSequence uniform = degree_sequence(3, 4, 2);
    CHECK(uniform.degrees == std::vector<int>{2, 2, 2});
    CHECK(uniform.anchors == std::vector<int>{1, 2, 3, 4});
    CHECK(uniform.remainder == 0);

    const DegreeSequence d46 = degree_sequence(4, 6, 2);
    CHECK(d46.degrees == std::vector<int>{3, 2, 2, 2});
    CHECK(d46.quotient == 2);
    CHECK(d46.remainder == 1);

    CHECK(degree_sequence(5, 7, 3).degrees == std::vector<int>{3, 2, 2, 2, 2});
}

TEST_CASE("degree_sequence invariants")
{
    for (int a = 1; a <= 25; ++a)
        for (int b = 1; b <= 25; ++b)
            for (int t = 1; t <= a; ++t) {
                const DegreeSequence d = degree_sequence(a, b, t);
                CHECK(std::accumulate(d.degrees.begin(), d.degrees.end(), 0) == a + b - 1);
                CHECK(d.quotient * a + d.remainder == a + b - 1);
                CHECK(std::count(d.degrees.begin(), d.degrees.end(), d.quotient + 1) == d.remainder);
                CHECK(std::all_of(d.degrees.begin(), d.degrees.end(),
                                  [&](int x) { return x == d.quotient || x == d.quotient + 1; }));
                CHECK(d.anchors.front() == 1);
                CHECK(d.anchors.back() == b);
                for (int j = 1; j <= a; ++j)
                    CHECK(d.anchors[static_cast<std::size_t>(j)] - d.anchors[static_cast<std::size_t>(j - 1)] ==
                          d.degrees[static_cast<std::size_t>(j - 1)] - 1);
            }
}

TEST_CASE("window_sum wraps cyclically")
{
    CHECK(window_sum(degree_sequence(3, 4, 2), 1, 2) == 4);
    const DegreeSequence d46 = degree_sequence(4, 6, 2);
    CHECK(window_sum(d46, 4, 2) == 5);
    const DegreeSequence d57 = degree_sequence(5, 7, 3);
    CHECK(window_sum(d57, 4, 3) == 7);
    CHECK_THROWS_AS(window_sum(d57, 0, 3), InvalidArgument);
}

TEST_CASE("verify_shift_capacity")
{
    const DegreeSequence d34 = degree_sequence(3, 4, 2);
    CHECK(verify_shift_capacity(d34, 4, 2));
    CHECK_FALSE(verify_shift_capacity(d34, 4, 3));
    CHECK(verify_shift_capacity(degree_sequence(5, 7, 3), 7, 3));
}

TEST_CASE("balance at the construction shift")
{
    // The sequence built for shift t has all length-t windows within one.
    for (int a = 1; a <= 30; ++a)
        for (int b = a; b <= 30; ++b)
            for (int t = 1; t <= a; ++t) {
                const DegreeSequence d = degree_sequence(a, b, t);
                int lo = window_sum(d, 1, t);
                int hi = lo;
                for (int j = 2; j <= a; ++j) {
                    lo = std::min(lo, window_sum(d, j, t));
                    hi = std::max(hi, window_sum(d, j, t));
                }
                CHECK(hi - lo <= 1);
            }
}

TEST_CASE("capacity holds at the target count")
{
    for (int a = 1; a <= 60; ++a)
        for (int b = a; b <= 60; ++b) {
            const int target = target_tree_count(a, b);
            CHECK(verify_shift_capacity(degree_sequence(a, b, target), b, target));
        }
}

TEST_CASE("build_tree reproduces the hand-written lists")
{
    const DegreeSequence d = degree_sequence(3, 4, 2);
    CHECK(rows(build_tree(d, 4, 1), 3) == std::vector<std::vector<int>>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(rows(build_tree(d, 4, 2), 3) == std::vector<std::vector<int>>{{3, 4}, {4, 1}, {1, 2}});

    const DegreeSequence d5 = degree_sequence(5, 6, 3);
    REQUIRE(d5.degrees == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(rows(build_tree(d5, 6, 3), 5) ==
          std::vector<std::vector<int>>{{5, 6}, {6, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("build_tree refuses shifts that overlap")
{
    const DegreeSequence d = degree_sequence(3, 4, 2);
    CHECK_THROWS_AS(build_tree(d, 4, 3), NotConstructible);
    CHECK_THROWS_AS(build_tree(d, 5, 1), InvalidArgument);
}

TEST_CASE("build_packing small cases")
{
    CHECK(build_packing(normalize(2, 2)).trees.size() == 1);

    const SpanningTreePacking p34 = build_packing(normalize(3, 4));
    CHECK(p34.trees.size() == 2);
    CHECK(test::packing_is_sound(normalize(3, 4), p34.trees));

    const SpanningTreePacking p56 = build_packing(normalize(5, 6));
    REQUIRE(p56.trees.size() == 3);
    std::set<Edge> used;
    for (const Tree& t : p56.trees)
        used.insert(t.edges.begin(), t.edges.end());
    CHECK(used.size() == 30);
}

TEST_CASE("build_packing is sound for a <= b <= 40")
{
    for (int a = 1; a <= 40; ++a)
        for (int b = a; b <= 40; ++b) {
            const BipartiteOrder order = normalize(a, b);
            const SpanningTreePacking p = build_packing(order);
            CHECK(static_cast<int>(p.trees.size()) == target_tree_count(a, b));
            CHECK(test::packing_is_sound(order, p.trees));
        }
}

TEST_CASE("each x gets disjoint consecutive arcs across the packing")
{
    for (int a = 1; a <= 20; ++a)
        for (int b = a; b <= 20; ++b) {
            const int target = target_tree_count(a, b);
            const DegreeSequence d = degree_sequence(a, b, target);
            const SpanningTreePacking p = build_packing(normalize(a, b));
            for (int x = 1; x <= a; ++x) {
                std::vector<int> arc;
                for (const Tree& t : p.trees) {
                    const std::vector<std::vector<int>> r = rows(t, a);
                    for (int y : r[static_cast<std::size_t>(x - 1)])
                        arc.push_back(y);
                }
                CHECK(static_cast<int>(arc.size()) == window_sum(d, x, target));
                // Concatenated rows walk forward one position at a time.
                for (std::size_t n = 1; n < arc.size(); ++n)
                    CHECK(arc[n] == arc[n - 1] % b + 1);
            }
        }
}

TEST_CASE("shifted trees with the larger side first")
{
    for (int a = 1; a <= 15; ++a)
        for (int b = 1; b < a; ++b) {
            const int target = target_tree_count(a, b);
            const std::vector<Tree> trees = build_shifted_trees(a, b, target);
            REQUIRE(static_cast<int>(trees.size()) == target);
            // Reinterpret with the sides exchanged so validation sees a <= b.
            std::vector<Tree> flipped;
            for (const Tree& t : trees) {
                Tree f;
                for (const Edge& e : t.edges)
                    f.edges.push_back({e.y, e.x});
                flipped.push_back(f);
            }
            CHECK(test::packing_is_sound(normalize(b, a), flipped));
        }
    CHECK_THROWS_AS(build_shifted_trees(3, 4, 3), NotConstructible);
}

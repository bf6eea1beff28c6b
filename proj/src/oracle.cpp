#include "kbip/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

namespace kbip::oracle {

namespace {

using EdgeMask = std::uint64_t;
using VertexMask = std::uint32_t;

struct UnionFind {
    std::array<int, 32> parent{};

    explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }

    int find(int v)
    {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)];
        return v;
    }

    bool unite(int u, int v)
    {
        u = find(u);
        v = find(v);
        if (u == v)
            return false;
        parent[static_cast<std::size_t>(u)] = v;
        return true;
    }
};

// Calls `emit` once for every spanning tree of the subgraph induced by
// `vertices`. Branches on each edge in index order: take it if it joins two
// components, skip it if the remaining edges can still connect everything.
class SpanningTreeEnumerator {
public:
    SpanningTreeEnumerator(const SmallGraph& graph, VertexMask vertices, std::function<void(EdgeMask)> emit)
        : graph_(graph), vertices_(vertices), emit_(std::move(emit))
    {
        for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
            const auto [u, v] = graph.edges[static_cast<std::size_t>(e)];
            if (inside(u) && inside(v))
                candidates_.push_back(e);
        }
        needed_ = std::popcount(vertices) - 1;
    }

    void run()
    {
        if (needed_ < 0)
            return;
        UnionFind uf(graph_.vertex_count);
        recurse(0, 0, 0, uf);
    }

private:
    bool inside(int v) const { return (vertices_ >> v) & 1U; }

    bool still_connectable(std::size_t from, const UnionFind& current) const
    {
        UnionFind uf = current;
        for (std::size_t n = from; n < candidates_.size(); ++n) {
            const auto [u, v] = graph_.edges[static_cast<std::size_t>(candidates_[n])];
            uf.unite(u, v);
        }
        int root = -1;
        for (int v = 0; v < graph_.vertex_count; ++v) {
            if (!inside(v))
                continue;
            const int r = uf.find(v);
            if (root == -1)
                root = r;
            else if (r != root)
                return false;
        }
        return true;
    }

    void recurse(std::size_t pos, EdgeMask chosen, int count, const UnionFind& uf)
    {
        if (count == needed_) {
            emit_(chosen);
            return;
        }
        if (pos == candidates_.size() ||
            static_cast<int>(candidates_.size() - pos) < needed_ - count)
            return;

        const int e = candidates_[pos];
        const auto [u, v] = graph_.edges[static_cast<std::size_t>(e)];
        UnionFind with = uf;
        if (with.unite(u, v))
            recurse(pos + 1, chosen | (EdgeMask{1} << e), count + 1, with);
        if (still_connectable(pos + 1, uf))
            recurse(pos + 1, chosen, count, uf);
    }

    const SmallGraph& graph_;
    VertexMask vertices_;
    std::function<void(EdgeMask)> emit_;
    std::vector<int> candidates_;
    int needed_ = 0;
};

struct Candidate {
    EdgeMask edges;
    VertexMask extras;
};

std::vector<int> edge_indices(EdgeMask mask)
{
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Depth-first search for the largest family of pairwise compatible
// candidates. Two candidates are compatible when their edge sets and their
// non-terminal vertex sets are disjoint. `bound` gives an upper limit on how
// many more candidates can still be added after the current choice.
class PackingSearch {
public:
    PackingSearch(std::vector<Candidate> candidates, std::function<int(EdgeMask)> bound)
        : candidates_(std::move(candidates)), bound_(std::move(bound))
    {
    }

    OracleResult run()
    {
        std::vector<std::size_t> chosen;
        recurse(0, 0, 0, chosen);
        OracleResult result;
        result.count = static_cast<int>(best_.size());
        for (std::size_t n : best_)
            result.trees.push_back(edge_indices(candidates_[n].edges));
        return result;
    }

private:
    void recurse(std::size_t start, EdgeMask used_edges, VertexMask used_vertices, std::vector<std::size_t>& chosen)
    {
        if (chosen.size() > best_.size())
            best_ = chosen;
        const int have = static_cast<int>(chosen.size());
        const int best = static_cast<int>(best_.size());
        if (have + static_cast<int>(candidates_.size() - start) <= best)
            return;
        if (have + bound_(used_edges) <= best)
            return;

        for (std::size_t n = start; n < candidates_.size(); ++n) {
            const Candidate& c = candidates_[n];
            if ((c.edges & used_edges) != 0 || (c.extras & used_vertices) != 0)
                continue;
            chosen.push_back(n);
            recurse(n + 1, used_edges | c.edges, used_vertices | c.extras, chosen);
            chosen.pop_back();
            if (have + static_cast<int>(candidates_.size() - n - 1) <= static_cast<int>(best_.size()))
                return;
        }
    }

    std::vector<Candidate> candidates_;
    std::function<int(EdgeMask)> bound_;
    std::vector<std::size_t> best_;
};

std::vector<EdgeMask> incidence(const SmallGraph& graph)
{
    std::vector<EdgeMask> out(static_cast<std::size_t>(graph.vertex_count), 0);
    for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
        const auto [u, v] = graph.edges[static_cast<std::size_t>(e)];
        out[static_cast<std::size_t>(u)] |= EdgeMask{1} << e;
        out[static_cast<std::size_t>(v)] |= EdgeMask{1} << e;
    }
    return out;
}

bool connected(const SmallGraph& graph)
{
    UnionFind uf(graph.vertex_count);
    for (const auto& [u, v] : graph.edges)
        uf.unite(u, v);
    for (int v = 1; v < graph.vertex_count; ++v)
        if (uf.find(v) != uf.find(0))
            return false;
    return true;
}

void check_simple(const SmallGraph& graph)
{
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : graph.edges) {
        if (u < 0 || v < 0 || u >= graph.vertex_count || v >= graph.vertex_count || u == v)
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") is not a simple edge of the graph");
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("graph has a repeated edge");
}

}  // namespace

SmallGraph SmallGraph::complete_bipartite(int a, int b)
{
    SmallGraph g;
    g.vertex_count = a + b;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y)
            g.edges.emplace_back(x, a + y);
    return g;
}

SmallGraph SmallGraph::complete(int n)
{
    SmallGraph g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.edges.emplace_back(u, v);
    return g;
}

std::vector<int> canonical_terminals(int a, int k, int i)
{
    std::vector<int> out;
    for (int x = 0; x < i; ++x)
        out.push_back(x);
    for (int y = 0; y < k - i; ++y)
        out.push_back(a + y);
    return out;
}

OracleResult max_tree_set(const SmallGraph& graph, const std::vector<int>& terminals)
{
    if (graph.vertex_count > kMaxSteinerVertices)
        throw InstanceTooLarge("tree-set oracle is limited to " + std::to_string(kMaxSteinerVertices) +
                               " vertices, got " + std::to_string(graph.vertex_count));
    check_simple(graph);
    if (!connected(graph))
        throw std::invalid_argument("tree-set oracle needs a connected graph");

    VertexMask terminal_mask = 0;
    for (int s : terminals) {
        if (s < 0 || s >= graph.vertex_count)
            throw std::invalid_argument("terminal " + std::to_string(s) + " is not a vertex");
        terminal_mask |= VertexMask{1} << s;
    }
    if (std::popcount(terminal_mask) < 2)
        throw std::invalid_argument("tree-set oracle needs at least two distinct terminals");

    // Only trees whose leaves are all terminals are enumerated. If a tree has
    // a non-terminal leaf, deleting that leaf still leaves a tree containing
    // every terminal, and the smaller tree conflicts with a subset of what
    // the larger one conflicted with. So some optimal family uses only
    // leaf-minimal trees.
    std::vector<int> others;
    for (int v = 0; v < graph.vertex_count; ++v)
        if (((terminal_mask >> v) & 1U) == 0)
            others.push_back(v);

    std::vector<Candidate> candidates;
    const std::vector<EdgeMask> incident = incidence(graph);
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << others.size()); ++pick) {
        VertexMask extras = 0;
        for (std::size_t n = 0; n < others.size(); ++n)
            if ((pick >> n) & 1U)
                extras |= VertexMask{1} << others[n];
        const VertexMask vertices = terminal_mask | extras;
        SpanningTreeEnumerator(graph, vertices, [&](EdgeMask tree) {
            for (int v = 0; v < graph.vertex_count; ++v) {
                if (((vertices >> v) & 1U) == 0 || ((terminal_mask >> v) & 1U) != 0)
                    continue;
                if (std::popcount(tree & incident[static_cast<std::size_t>(v)]) < 2)
                    return;
            }
            candidates.push_back({tree, extras});
        }).run();
    }

    // Every further tree needs an unused edge at each terminal, and at least
    // |S| - 1 unused edges overall.
    const int min_tree_edges = std::popcount(terminal_mask) - 1;
    auto bound = [&](EdgeMask used) {
        int best = (static_cast<int>(graph.edges.size()) - std::popcount(used)) / min_tree_edges;
        for (int s : terminals)
            best = std::min(best, std::popcount(incident[static_cast<std::size_t>(s)] & ~used));
        return best;
    };
    return PackingSearch(std::move(candidates), bound).run();
}

int spanning_packing(int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("side sizes must be positive");
    if (static_cast<long long>(a) * b > kMaxSpanningEdges)
        throw InstanceTooLarge("spanning-packing oracle is limited to ab <= " + std::to_string(kMaxSpanningEdges) +
                               ", got " + std::to_string(a) + "x" + std::to_string(b));

    const SmallGraph graph = SmallGraph::complete_bipartite(a, b);
    const VertexMask all = (VertexMask{1} << graph.vertex_count) - 1;
    std::vector<Candidate> candidates;
    SpanningTreeEnumerator(graph, all, [&](EdgeMask tree) { candidates.push_back({tree, 0}); }).run();

    const int tree_edges = graph.vertex_count - 1;
    const int total_edges = static_cast<int>(graph.edges.size());
    auto bound = [=](EdgeMask used) {
        if (tree_edges == 0)
            return 0;
        return (total_edges - std::popcount(used)) / tree_edges;
    };
    return PackingSearch(std::move(candidates), bound).run().count;
}

int kappa_k(int a, int b, int k)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("side sizes must be positive");
    if (a + b > kMaxKappaVertices)
        throw InstanceTooLarge("kappa oracle is limited to a + b <= " + std::to_string(kMaxKappaVertices) +
                               ", got " + std::to_string(a + b));
    if (k < 2 || k > a + b)
        throw std::invalid_argument("k must lie in [2, a + b]");

    // Vertices on one side are interchangeable, so every k-set is an image
    // of some x_1..x_i, y_1..y_{k-i} under an automorphism.
    const SmallGraph graph = SmallGraph::complete_bipartite(a, b);
    int best = -1;
    for (int i = std::max(0, k - b); i <= std::min(a, k); ++i) {
        const int count = max_tree_set(graph, canonical_terminals(a, k, i)).count;
        best = best < 0 ? count : std::min(best, count);
    }
    return best;
}

}  // namespace kbip::oracle

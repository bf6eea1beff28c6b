#include "kbip/bipartite_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kbip {

std::string_view to_string(Side s) noexcept { return s == Side::X ? "X" : "Y"; }

std::string to_string(const VertexId& v)
{
    return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

std::vector<VertexId> Tree::vertices() const
{
    std::set<VertexId> seen;
    for (const Edge& e : edges) {
        seen.insert({Side::X, e.x});
        seen.insert({Side::Y, e.y});
    }
    return {seen.begin(), seen.end()};
}

bool BipartiteOrder::contains(const VertexId& v) const noexcept
{
    const int limit = v.side == Side::X ? a_ : b_;
    return v.index >= 1 && v.index <= limit;
}

bool BipartiteOrder::contains(const Edge& e) const noexcept
{
    return e.x >= 1 && e.x <= a_ && e.y >= 1 && e.y <= b_;
}

BipartiteOrder normalize(long long a_raw, long long b_raw)
{
    constexpr long long kMaxSide = 1'000'000;
    if (a_raw < 1 || b_raw < 1)
        throw InvalidArgument("side sizes must be positive, got " + std::to_string(a_raw) +
                              " and " + std::to_string(b_raw));
    if (a_raw > kMaxSide || b_raw > kMaxSide)
        throw InvalidArgument("side size exceeds " + std::to_string(kMaxSide));
    const auto lo = static_cast<int>(std::min(a_raw, b_raw));
    const auto hi = static_cast<int>(std::max(a_raw, b_raw));
    return BipartiteOrder(lo, hi, a_raw > b_raw);
}

std::string_view to_string(ViolationKind kind) noexcept
{
    switch (kind) {
    case ViolationKind::OutOfRange: return "out-of-range";
    case ViolationKind::Cycle: return "cycle";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::MissingTerminal: return "missing-terminal";
    case ViolationKind::BadTree: return "bad-tree";
    case ViolationKind::EdgeOverlap: return "edge-overlap";
    case ViolationKind::VertexOverlap: return "vertex-overlap";
    case ViolationKind::WrongTerminals: return "wrong-terminals";
    }
    return "unknown";
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool unite(std::size_t u, std::size_t v)
    {
        u = find(u);
        v = find(v);
        if (u == v)
            return false;
        parent_[u] = v;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

ValidationReport single(ViolationKind kind, std::string detail)
{
    ValidationReport report;
    report.violations.push_back({kind, std::move(detail)});
    return report;
}

std::string edge_text(const Edge& e)
{
    return "x" + std::to_string(e.x) + "y" + std::to_string(e.y);
}

}  // namespace

ValidationReport validate_tree(const BipartiteOrder& order,
                               std::span<const VertexId> required,
                               const Tree& tree)
{
    for (const Edge& e : tree.edges)
        if (!order.contains(e))
            return single(ViolationKind::OutOfRange, "edge " + edge_text(e) + " is not in K_{" +
                                                         std::to_string(order.a()) + "," +
                                                         std::to_string(order.b()) + "}");
    for (const VertexId& v : required)
        if (!order.contains(v))
            return single(ViolationKind::OutOfRange, "required vertex " + to_string(v) + " is out of range");

    const auto a = static_cast<std::size_t>(order.a());
    auto slot = [a](const VertexId& v) {
        return v.side == Side::X ? static_cast<std::size_t>(v.index - 1)
                                 : a + static_cast<std::size_t>(v.index - 1);
    };

    DisjointSets sets(static_cast<std::size_t>(order.vertex_count()));
    for (const Edge& e : tree.edges)
        if (!sets.unite(slot({Side::X, e.x}), slot({Side::Y, e.y})))
            return single(ViolationKind::Cycle, "edge " + edge_text(e) + " closes a cycle");

    const std::vector<VertexId> present = tree.vertices();
    if (!present.empty()) {
        const std::size_t root = sets.find(slot(present.front()));
        for (const VertexId& v : present)
            if (sets.find(slot(v)) != root)
                return single(ViolationKind::Disconnected,
                              to_string(v) + " is not connected to " + to_string(present.front()));
    }

    for (const VertexId& v : required)
        if (!std::binary_search(present.begin(), present.end(), v))
            return single(ViolationKind::MissingTerminal, to_string(v) + " is not in the tree");

    return {};
}

bool TerminalSet::contains(const VertexId& v) const noexcept
{
    return v.index >= 1 && v.index <= (v.side == Side::X ? x_count() : y_count());
}

std::vector<VertexId> TerminalSet::vertices() const
{
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(k_));
    for (int j = 1; j <= x_count(); ++j)
        out.push_back({Side::X, j});
    for (int j = 1; j <= y_count(); ++j)
        out.push_back({Side::Y, j});
    return out;
}

IndexRange terminal_index_range(const BipartiteOrder& order, int k)
{
    if (k < 2 || k > order.vertex_count())
        throw InvalidTerminalSet("k = " + std::to_string(k) + " is outside [2, " +
                                 std::to_string(order.vertex_count()) + "]");
    return {std::max(0, k - order.b()), std::min(order.a(), k)};
}

TerminalSet terminal_set(const BipartiteOrder& order, int k, int i)
{
    const IndexRange range = terminal_index_range(order, k);
    if (i < range.lo || i > range.hi)
        throw InvalidTerminalSet("i = " + std::to_string(i) + " is outside [" + std::to_string(range.lo) +
                                 ", " + std::to_string(range.hi) + "] for k = " + std::to_string(k));
    return TerminalSet(k, i);
}

}  // namespace kbip

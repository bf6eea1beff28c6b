#include "kbip/witness_builder.hpp"

#include "kbip/connectivity.hpp"
#include "kbip/tree_packing.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace kbip {

std::string_view to_string(TreeClass c) noexcept
{
    switch (c) {
    case TreeClass::A0: return "A0";
    case TreeClass::A1: return "A1";
    case TreeClass::A2: return "A2";
    }
    return "?";
}

std::optional<TreeClass> parse_tree_class(std::string_view text) noexcept
{
    if (text == "A0")
        return TreeClass::A0;
    if (text == "A1")
        return TreeClass::A1;
    if (text == "A2")
        return TreeClass::A2;
    return std::nullopt;
}

ResidualLedger::ResidualLedger(const TerminalSet& terminal)
    : x_terminals_(terminal.x_count()),
      y_terminals_(terminal.y_count()),
      used_(static_cast<std::size_t>(x_terminals_) * static_cast<std::size_t>(y_terminals_), false),
      x_capacity_(static_cast<std::size_t>(x_terminals_), y_terminals_),
      y_capacity_(static_cast<std::size_t>(y_terminals_), x_terminals_)
{
}

int ResidualLedger::capacity(Side side, int terminal) const
{
    const auto& caps = side == Side::X ? x_capacity_ : y_capacity_;
    if (terminal < 1 || terminal > static_cast<int>(caps.size()))
        throw InvalidArgument("no terminal " + to_string(VertexId{side, terminal}) + " in S_i");
    return caps[static_cast<std::size_t>(terminal - 1)];
}

int ResidualLedger::min_capacity(Side side) const
{
    const auto& caps = side == Side::X ? x_capacity_ : y_capacity_;
    return caps.empty() ? 0 : *std::min_element(caps.begin(), caps.end());
}

std::size_t ResidualLedger::slot(const Edge& e) const
{
    return static_cast<std::size_t>(e.x - 1) * static_cast<std::size_t>(y_terminals_) +
           static_cast<std::size_t>(e.y - 1);
}

bool ResidualLedger::available(const Edge& e) const
{
    return e.x >= 1 && e.x <= x_terminals_ && e.y >= 1 && e.y <= y_terminals_ && !used_[slot(e)];
}

void ResidualLedger::consume(const Edge& e)
{
    if (!available(e))
        throw ConstructionBug("internal edge x" + std::to_string(e.x) + "y" + std::to_string(e.y) +
                              " is not available");
    used_[slot(e)] = true;
    --x_capacity_[static_cast<std::size_t>(e.x - 1)];
    --y_capacity_[static_cast<std::size_t>(e.y - 1)];
}

std::optional<Edge> ResidualLedger::take_lowest(Side side, int terminal)
{
    const int others = side == Side::X ? y_terminals_ : x_terminals_;
    for (int other = 1; other <= others; ++other) {
        const Edge e = side == Side::X ? Edge{terminal, other} : Edge{other, terminal};
        if (available(e)) {
            consume(e);
            return e;
        }
    }
    return std::nullopt;
}

std::vector<ClassifiedTree> build_a2_trees(const BipartiteOrder& order, const TerminalSet& terminal, int count)
{
    const int i = terminal.x_count();
    const int m = terminal.y_count();
    if (count < 0 || count > std::min(order.a() - i, order.b() - m))
        throw InvalidArgument("cannot pair " + std::to_string(count) + " spare vertices: " +
                              std::to_string(order.a() - i) + " spare in X, " + std::to_string(order.b() - m) +
                              " spare in Y");

    std::vector<ClassifiedTree> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        const int u = i + n;
        const int v = m + n;
        ClassifiedTree t;
        t.tree_class = TreeClass::A2;
        t.extras = {{Side::X, u}, {Side::Y, v}};
        for (int x = 1; x <= i; ++x)
            t.tree.edges.push_back({x, v});
        for (int y = 1; y <= m; ++y)
            t.tree.edges.push_back({u, y});
        // The two stars are joined through uv.
        t.tree.edges.push_back({u, v});
        std::sort(t.tree.edges.begin(), t.tree.edges.end());
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<ClassifiedTree> build_internal_trees(const BipartiteOrder& order, const TerminalSet& terminal,
                                                 int p, int q, Side side, int skip_spares)
{
    const int i = terminal.x_count();
    const int m = terminal.y_count();
    const int k = terminal.k();
    if (i == 0 || m == 0)
        throw InvalidArgument("internal trees need terminals on both sides");
    if (p < 0 || q < 0 || skip_spares < 0)
        throw InvalidArgument("tree counts must be non-negative");

    const long long budget = static_cast<long long>(i) * m;
    const long long needed = static_cast<long long>(p) * (k - 1) +
                             static_cast<long long>(q) * a1_internal_cost(terminal, side);
    if (needed > budget)
        throw InvalidArgument(std::to_string(p) + " A0 and " + std::to_string(q) + " A1 trees need " +
                              std::to_string(needed) + " internal edges, only " + std::to_string(budget) +
                              " exist");
    const int spares = side == Side::X ? order.a() - i : order.b() - m;
    if (skip_spares + q > spares)
        throw InvalidArgument("not enough spare vertices in " + std::string(to_string(side)) + " for " +
                              std::to_string(q) + " A1 trees");

    std::vector<ClassifiedTree> out;
    out.reserve(static_cast<std::size_t>(p + q));
    ResidualLedger ledger(terminal);

    // Phase one: shifted spanning trees of K_{i,m}, with the degree sequence
    // on the attaching side so its leftover edges stay balanced.
    const std::vector<Tree> internal =
        side == Side::X ? build_shifted_trees(i, m, p) : build_shifted_trees(m, i, p);
    for (const Tree& shifted : internal) {
        ClassifiedTree t;
        t.tree_class = TreeClass::A0;
        for (const Edge& e : shifted.edges)
            t.tree.edges.push_back(side == Side::X ? e : Edge{e.y, e.x});
        std::sort(t.tree.edges.begin(), t.tree.edges.end());
        for (const Edge& e : t.tree.edges)
            ledger.consume(e);
        out.push_back(std::move(t));
    }

    if (ledger.min_capacity(side) < q)
        throw ConstructionBug("residual internal edges on side " + std::string(to_string(side)) +
                              " fall short of " + std::to_string(q) + " after " + std::to_string(p) + " A0 trees");

    // Phase two: one hub per tree, reaching every opposite-side terminal over
    // external edges; same-side terminals hang off a residual internal edge.
    const int same_side = side == Side::X ? i : m;
    const int other_side = side == Side::X ? m : i;
    const int first_spare = same_side + skip_spares;
    for (int n = 1; n <= q; ++n) {
        const int hub = first_spare + n;
        ClassifiedTree t;
        t.tree_class = TreeClass::A1;
        t.extras = {{side, hub}};
        for (int o = 1; o <= other_side; ++o)
            t.tree.edges.push_back(side == Side::X ? Edge{hub, o} : Edge{o, hub});
        for (int s = 1; s <= same_side; ++s) {
            const std::optional<Edge> e = ledger.take_lowest(side, s);
            if (!e)
                throw ConstructionBug("terminal " + to_string(VertexId{side, s}) + " ran out of internal edges");
            t.tree.edges.push_back(*e);
        }
        std::sort(t.tree.edges.begin(), t.tree.edges.end());
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

std::vector<ClassifiedTree> star_trees(const BipartiteOrder& order, const TerminalSet& terminal)
{
    // One-sided terminal sets: every hub on the other side is its own tree.
    const Side hub_side = terminal.x_count() == 0 ? Side::X : Side::Y;
    const int hubs = hub_side == Side::X ? order.a() : order.b();
    std::vector<ClassifiedTree> out;
    out.reserve(static_cast<std::size_t>(hubs));
    for (int h = 1; h <= hubs; ++h) {
        ClassifiedTree t;
        t.tree_class = TreeClass::A1;
        t.extras = {{hub_side, h}};
        for (int s = 1; s <= terminal.k(); ++s)
            t.tree.edges.push_back(hub_side == Side::X ? Edge{h, s} : Edge{s, h});
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

SteinerWitness build_witness(const BipartiteOrder& order, int k, int i)
{
    const TerminalSet terminal = terminal_set(order, k, i);
    const KappaBreakdown breakdown = kappa_terminal(order, k, i);

    SteinerWitness witness{terminal, {}};
    if (i == 0 || i == k) {
        witness.trees = star_trees(order, terminal);
    } else {
        witness.trees = build_a2_trees(order, terminal, breakdown.a2);
        std::vector<ClassifiedTree> rest = build_internal_trees(
            order, terminal, breakdown.a0, breakdown.a1, breakdown.a1_side.value_or(Side::X), breakdown.a2);
        std::move(rest.begin(), rest.end(), std::back_inserter(witness.trees));
    }

    if (static_cast<int>(witness.trees.size()) != breakdown.kappa)
        throw ConstructionBug("built " + std::to_string(witness.trees.size()) + " trees, expected " +
                              std::to_string(breakdown.kappa));
    return witness;
}

ValidationReport verify_witness(const BipartiteOrder& order, const SteinerWitness& witness)
{
    ValidationReport report;
    auto fail = [&report](ViolationKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
        return report;
    };

    const TerminalSet& terminal = witness.terminal;
    try {
        terminal_set(order, terminal.k(), terminal.i());
    } catch (const InvalidTerminalSet& e) {
        return fail(ViolationKind::WrongTerminals, e.what());
    }
    const std::vector<VertexId> required = terminal.vertices();

    std::map<Edge, std::size_t> edge_owner;
    std::map<VertexId, std::size_t> extra_owner;
    for (std::size_t n = 0; n < witness.trees.size(); ++n) {
        const Tree& tree = witness.trees[n].tree;
        const std::string label = "tree " + std::to_string(n + 1);

        const ValidationReport single = validate_tree(order, required, tree);
        if (!single.ok())
            return fail(ViolationKind::BadTree,
                        label + ": " + std::string(to_string(single.first().kind)) + ": " + single.first().detail);

        for (const Edge& e : tree.edges) {
            const auto [it, fresh] = edge_owner.emplace(e, n);
            if (!fresh)
                return fail(ViolationKind::EdgeOverlap, label + " reuses x" + std::to_string(e.x) + "y" +
                                                            std::to_string(e.y) + " from tree " +
                                                            std::to_string(it->second + 1));
        }
        for (const VertexId& v : tree.vertices()) {
            if (terminal.contains(v))
                continue;
            const auto [it, fresh] = extra_owner.emplace(v, n);
            if (!fresh)
                return fail(ViolationKind::VertexOverlap, label + " shares " + to_string(v) + " with tree " +
                                                              std::to_string(it->second + 1));
        }
    }
    return report;
}

}  // namespace kbip

#include "kbip/connectivity.hpp"

#include <algorithm>
#include <string>

namespace kbip {

int a1_internal_cost(const TerminalSet& terminal, Side side)
{
    return side == Side::X ? terminal.x_count() : terminal.y_count();
}

int kappa_complete(int n, int k)
{
    if (k < 2 || k > n)
        throw InvalidArgument("kappa_complete needs 2 <= k <= n, got n = " + std::to_string(n) +
                              ", k = " + std::to_string(k));
    return n - (k + 1) / 2;
}

KappaBreakdown kappa_terminal(const BipartiteOrder& order, int k, int i)
{
    const TerminalSet terminal = terminal_set(order, k, i);
    KappaBreakdown out;

    if (i == 0) {
        out.a1 = order.a();
        out.a1_side = Side::X;
        out.kappa = out.a1;
        return out;
    }
    if (i == k) {
        out.a1 = order.b();
        out.a1_side = Side::Y;
        out.kappa = out.a1;
        return out;
    }

    const int y_terminals = terminal.y_count();
    const int spare_x = order.a() - i;
    const int spare_y = order.b() - y_terminals;

    out.a2 = std::min(spare_x, spare_y);
    const Side side = spare_y >= spare_x ? Side::Y : Side::X;
    // An a1 tree with its extra on `side` takes one internal edge at each
    // same-side terminal, and such a terminal has one internal edge per
    // opposite-side terminal.
    const int leftover = spare_y >= spare_x ? spare_y - spare_x : spare_x - spare_y;
    const int per_terminal = side == Side::Y ? i : y_terminals;
    out.a1 = std::min(leftover, per_terminal);
    if (out.a1 > 0)
        out.a1_side = side;

    const long long internal = static_cast<long long>(i) * y_terminals;
    const long long used = static_cast<long long>(out.a1) * a1_internal_cost(terminal, side);
    out.a0 = static_cast<int>((internal - used) / (k - 1));
    out.kappa = out.a2 + out.a1 + out.a0;
    return out;
}

int kappa_bipartite(const BipartiteOrder& order, int k)
{
    terminal_index_range(order, k);
    const long long a = order.a();
    const long long b = order.b();
    if (k <= b - a + 2)
        return order.a();
    const long long kk = k;
    if ((a - b + kk) % 2 != 0)
        return static_cast<int>((a + b - kk + 1) / 2 + (a - b + kk - 1) * (b - a + kk - 1) / (4 * (kk - 1)));
    return static_cast<int>((a + b - kk) / 2 + (a - b + kk) * (b - a + kk) / (4 * (kk - 1)));
}

int min_terminal_index(const BipartiteOrder& order, int k)
{
    const IndexRange range = terminal_index_range(order, k);
    const int target = kappa_bipartite(order, k);
    for (int i = range.lo; i <= range.hi; ++i)
        if (kappa_terminal(order, k, i).kappa == target)
            return i;
    throw ConstructionBug("no terminal set attains kappa_" + std::to_string(k) + " = " + std::to_string(target));
}

}  // namespace kbip

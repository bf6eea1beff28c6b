// Vertex and edge identifiers for K_{a,b}, tree validation, and canonical
// terminal sets.
//
// The complete bipartite graph is never stored. A vertex is a (side, index)
// pair and an edge is an (x-index, y-index) pair; membership in K_{a,b} is a
// range check. All public indices are 1-based.

#ifndef KBIP_BIPARTITE_CORE_HPP
#define KBIP_BIPARTITE_CORE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kbip {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidTerminalSet : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// A construction step was asked for something its preconditions exclude.
class NotConstructible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal guarantee failed. Seeing one of these means the code is wrong.
class ConstructionBug : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Side : std::uint8_t { X, Y };

constexpr Side opposite(Side s) noexcept { return s == Side::X ? Side::Y : Side::X; }
std::string_view to_string(Side s) noexcept;

struct VertexId {
    Side side = Side::X;
    int index = 1;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& v);

struct Edge {
    int x = 1;
    int y = 1;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Tree {
    std::vector<Edge> edges;

    // Distinct endpoints, X vertices first, each side ascending.
    std::vector<VertexId> vertices() const;
};

/// The bipartition sizes with a <= b. `swapped` records that the caller gave
/// the larger side first, so emitted labels must be flipped back.
class BipartiteOrder {
public:
    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    bool swapped() const noexcept { return swapped_; }

    int vertex_count() const noexcept { return a_ + b_; }
    bool contains(const VertexId& v) const noexcept;
    bool contains(const Edge& e) const noexcept;

    friend BipartiteOrder normalize(long long a_raw, long long b_raw);
    friend bool operator==(const BipartiteOrder&, const BipartiteOrder&) = default;

private:
    BipartiteOrder(int a, int b, bool swapped) : a_(a), b_(b), swapped_(swapped) {}

    int a_;
    int b_;
    bool swapped_;
};

/// Orders the two side sizes. Throws InvalidArgument for non-positive input.
BipartiteOrder normalize(long long a_raw, long long b_raw);

enum class ViolationKind : std::uint8_t {
    OutOfRange,
    Cycle,
    Disconnected,
    MissingTerminal,
    BadTree,
    EdgeOverlap,
    VertexOverlap,
    WrongTerminals,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    // Precondition: !ok().
    const Violation& first() const { return violations.front(); }
};

/// Checks that `tree` is a tree of K_{a,b} whose vertex set contains
/// `required`. Stops at the first violation: out-of-range, then cycle
/// (a repeated edge counts as a cycle), then disconnected, then
/// missing-terminal.
ValidationReport validate_tree(const BipartiteOrder& order,
                               std::span<const VertexId> required,
                               const Tree& tree);

/// S_i: x_1..x_i together with y_1..y_{k-i}.
class TerminalSet {
public:
    int k() const noexcept { return k_; }
    int i() const noexcept { return i_; }
    int x_count() const noexcept { return i_; }
    int y_count() const noexcept { return k_ - i_; }

    bool contains(const VertexId& v) const noexcept;
    std::vector<VertexId> vertices() const;

    friend TerminalSet terminal_set(const BipartiteOrder& order, int k, int i);
    friend bool operator==(const TerminalSet&, const TerminalSet&) = default;

private:
    TerminalSet(int k, int i) : k_(k), i_(i) {}

    int k_;
    int i_;
};

/// Valid exactly for 2 <= k <= a+b and max(0, k-b) <= i <= min(a, k);
/// throws InvalidTerminalSet otherwise.
TerminalSet terminal_set(const BipartiteOrder& order, int k, int i);

// The admissible i range for a given k, as a closed interval.
struct IndexRange {
    int lo;
    int hi;
};

IndexRange terminal_index_range(const BipartiteOrder& order, int k);

}  // namespace kbip

#endif  // KBIP_BIPARTITE_CORE_HPP

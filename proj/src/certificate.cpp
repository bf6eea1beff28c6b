#include "kbip/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace kbip {

namespace {

using ordered_json = nlohmann::ordered_json;

// Internal edges always have x on the smaller side.
Edge to_caller(const Edge& e, bool swapped) { return swapped ? Edge{e.y, e.x} : e; }
Edge to_internal(const Edge& e, bool swapped) { return swapped ? Edge{e.y, e.x} : e; }

CertificateTree make_tree(const Tree& tree, std::optional<TreeClass> tree_class, bool swapped)
{
    CertificateTree out{tree_class, {}};
    out.edges.reserve(tree.edges.size());
    for (const Edge& e : tree.edges)
        out.edges.push_back(to_caller(e, swapped));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

[[noreturn]] void format_error(const std::string& what) { throw FormatError("certificate: " + what); }

int positive_int(const nlohmann::json& value, const char* key)
{
    if (!value.is_number_integer())
        format_error(std::string("\"") + key + "\" must be an integer");
    const auto v = value.get<long long>();
    if (v < 1 || v > 1'000'000)
        format_error(std::string("\"") + key + "\" is out of range");
    return static_cast<int>(v);
}

int plain_int(const nlohmann::json& value, const char* key)
{
    if (!value.is_number_integer())
        format_error(std::string("\"") + key + "\" must be an integer");
    const auto v = value.get<long long>();
    if (v < -1'000'000 || v > 1'000'000)
        format_error(std::string("\"") + key + "\" is out of range");
    return static_cast<int>(v);
}

}  // namespace

CertificateDocument make_document(long long a_raw, long long b_raw, const SpanningTreePacking& packing)
{
    const BipartiteOrder order = normalize(a_raw, b_raw);
    if (order != packing.order)
        throw InvalidArgument("packing was built for a different graph");
    CertificateDocument doc;
    doc.kind = CertificateKind::Packing;
    doc.a = static_cast<int>(a_raw);
    doc.b = static_cast<int>(b_raw);
    for (const Tree& t : packing.trees)
        doc.trees.push_back(make_tree(t, std::nullopt, order.swapped()));
    return doc;
}

CertificateDocument make_document(long long a_raw, long long b_raw, const SteinerWitness& witness)
{
    const BipartiteOrder order = normalize(a_raw, b_raw);
    CertificateDocument doc;
    doc.kind = CertificateKind::Witness;
    doc.a = static_cast<int>(a_raw);
    doc.b = static_cast<int>(b_raw);
    doc.k = witness.terminal.k();
    doc.i = order.swapped() ? witness.terminal.y_count() : witness.terminal.x_count();
    for (const ClassifiedTree& t : witness.trees)
        doc.trees.push_back(make_tree(t.tree, t.tree_class, order.swapped()));
    return doc;
}

std::string emit_json(const CertificateDocument& doc)
{
    ordered_json root;
    root["kind"] = doc.kind == CertificateKind::Packing ? "packing" : "witness";
    root["a"] = doc.a;
    root["b"] = doc.b;
    if (doc.k)
        root["k"] = *doc.k;
    if (doc.i)
        root["i"] = *doc.i;
    ordered_json trees = ordered_json::array();
    for (const CertificateTree& t : doc.trees) {
        ordered_json entry;
        if (t.tree_class)
            entry["class"] = std::string(to_string(*t.tree_class));
        std::vector<Edge> edges = t.edges;
        std::sort(edges.begin(), edges.end());
        ordered_json list = ordered_json::array();
        for (const Edge& e : edges)
            list.push_back({e.x, e.y});
        entry["edges"] = std::move(list);
        trees.push_back(std::move(entry));
    }
    root["trees"] = std::move(trees);
    return root.dump();
}

CertificateDocument parse_json(std::string_view text)
{
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        format_error(std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object())
        format_error("top level must be an object");

    CertificateDocument doc;
    if (!root.contains("kind") || !root["kind"].is_string())
        format_error("missing \"kind\"");
    const std::string kind = root["kind"].get<std::string>();
    if (kind == "packing")
        doc.kind = CertificateKind::Packing;
    else if (kind == "witness")
        doc.kind = CertificateKind::Witness;
    else
        format_error("unknown kind \"" + kind + "\"");

    if (!root.contains("a") || !root.contains("b"))
        format_error("missing \"a\" or \"b\"");
    doc.a = positive_int(root["a"], "a");
    doc.b = positive_int(root["b"], "b");
    if (root.contains("k"))
        doc.k = plain_int(root["k"], "k");
    if (root.contains("i"))
        doc.i = plain_int(root["i"], "i");
    if (doc.kind == CertificateKind::Witness && (!doc.k || !doc.i))
        format_error("a witness needs \"k\" and \"i\"");

    if (!root.contains("trees") || !root["trees"].is_array())
        format_error("missing \"trees\" array");
    for (const auto& entry : root["trees"]) {
        if (!entry.is_object() || !entry.contains("edges") || !entry["edges"].is_array())
            format_error("each tree needs an \"edges\" array");
        CertificateTree tree;
        if (entry.contains("class")) {
            if (!entry["class"].is_string())
                format_error("\"class\" must be a string");
            tree.tree_class = parse_tree_class(entry["class"].get<std::string>());
            if (!tree.tree_class)
                format_error("unknown tree class " + entry["class"].dump());
        }
        for (const auto& edge : entry["edges"]) {
            if (!edge.is_array() || edge.size() != 2)
                format_error("each edge must be a pair [x, y]");
            tree.edges.push_back({plain_int(edge[0], "edge"), plain_int(edge[1], "edge")});
        }
        doc.trees.push_back(std::move(tree));
    }
    return doc;
}

std::string_view palette_color(std::size_t tree_index) noexcept
{
    static constexpr std::array<std::string_view, kPaletteSize> palette = {
        "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
        "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
    };
    return palette[tree_index % palette.size()];
}

std::string emit_dot(const CertificateDocument& doc)
{
    const bool witness = doc.kind == CertificateKind::Witness;
    const int x_terminals = witness ? doc.i.value_or(0) : 0;
    const int y_terminals = witness ? doc.k.value_or(0) - x_terminals : 0;

    std::ostringstream out;
    out << "graph \"" << (witness ? "witness" : "packing") << "_K" << doc.a << "_" << doc.b;
    if (witness)
        out << "_k" << *doc.k << "_i" << *doc.i;
    out << "\" {\n";
    out << "  node [shape=circle];\n";
    auto vertex = [&](char side, int index, bool terminal) {
        out << "  " << side << index;
        if (terminal)
            out << " [shape=box]";
        out << ";\n";
    };
    for (int x = 1; x <= doc.a; ++x)
        vertex('x', x, x <= x_terminals);
    for (int y = 1; y <= doc.b; ++y)
        vertex('y', y, y <= y_terminals);

    for (std::size_t n = 0; n < doc.trees.size(); ++n) {
        const CertificateTree& t = doc.trees[n];
        out << "  // tree " << n + 1;
        if (t.tree_class)
            out << " (" << to_string(*t.tree_class) << ")";
        out << "\n";
        std::vector<Edge> edges = t.edges;
        std::sort(edges.begin(), edges.end());
        for (const Edge& e : edges)
            out << "  x" << e.x << " -- y" << e.y << " [color=\"" << palette_color(n) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

ValidationReport verify_document(const CertificateDocument& doc)
{
    ValidationReport report;
    auto fail = [&report](ViolationKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
        return report;
    };

    const BipartiteOrder order = normalize(doc.a, doc.b);
    auto internal_tree = [&](const CertificateTree& t) {
        Tree tree;
        for (const Edge& e : t.edges)
            tree.edges.push_back(to_internal(e, order.swapped()));
        return tree;
    };

    if (doc.kind == CertificateKind::Witness) {
        if (!doc.k || !doc.i)
            return fail(ViolationKind::WrongTerminals, "witness has no terminal set");
        const int k = *doc.k;
        const int i = order.swapped() ? k - *doc.i : *doc.i;
        std::optional<TerminalSet> terminal;
        try {
            terminal = terminal_set(order, k, i);
        } catch (const InvalidTerminalSet& e) {
            return fail(ViolationKind::WrongTerminals, e.what());
        }
        SteinerWitness witness{*terminal, {}};
        for (const CertificateTree& t : doc.trees)
            witness.trees.push_back({internal_tree(t), t.tree_class.value_or(TreeClass::A0), {}});
        ValidationReport result = verify_witness(order, witness);
        if (order.swapped())
            for (Violation& v : result.violations)
                v.detail += " (x/y labels refer to the smaller side first)";
        return result;
    }

    std::vector<VertexId> everything;
    for (int x = 1; x <= order.a(); ++x)
        everything.push_back({Side::X, x});
    for (int y = 1; y <= order.b(); ++y)
        everything.push_back({Side::Y, y});

    std::vector<Tree> trees;
    for (const CertificateTree& t : doc.trees)
        trees.push_back(internal_tree(t));

    std::map<Edge, std::size_t> owner;
    for (std::size_t n = 0; n < trees.size(); ++n)
        for (std::size_t m = 0; m < trees[n].edges.size(); ++m) {
            const auto [it, fresh] = owner.emplace(trees[n].edges[m], n);
            if (!fresh && it->second != n) {
                const Edge shown = doc.trees[n].edges[m];
                return fail(ViolationKind::EdgeOverlap, "tree " + std::to_string(n + 1) + " reuses x" +
                                                            std::to_string(shown.x) + "y" + std::to_string(shown.y) +
                                                            " from tree " + std::to_string(it->second + 1));
            }
        }

    for (std::size_t n = 0; n < trees.size(); ++n) {
        const ValidationReport single = validate_tree(order, everything, trees[n]);
        if (!single.ok())
            return fail(ViolationKind::BadTree, "tree " + std::to_string(n + 1) + ": " +
                                                    std::string(to_string(single.first().kind)) + ": " +
                                                    single.first().detail);
    }
    return report;
}

}  // namespace kbip

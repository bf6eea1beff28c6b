// Serialized certificates: spanning-tree packings and Steiner witnesses.
//
// Documents are stored in the caller's orientation. If the caller named the
// larger side first, `a` is that larger size and every edge is written as
// [index on the a side, index on the b side].
//
// Canonical JSON:
//   {"kind":"packing"|"witness","a":A,"b":B,"k":K,"i":I,
//    "trees":[{"class":"A0"|"A1"|"A2","edges":[[x,y],...]},...]}
// k, i and class appear for witnesses only. i counts terminals on the a side.

#ifndef KBIP_CERTIFICATE_HPP
#define KBIP_CERTIFICATE_HPP

#include "kbip/bipartite_core.hpp"
#include "kbip/tree_packing.hpp"
#include "kbip/witness_builder.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kbip {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CertificateKind { Packing, Witness };

struct CertificateTree {
    std::optional<TreeClass> tree_class;
    std::vector<Edge> edges;  // [a-side index, b-side index], 1-based

    friend bool operator==(const CertificateTree&, const CertificateTree&) = default;
};

struct CertificateDocument {
    CertificateKind kind = CertificateKind::Packing;
    int a = 0;
    int b = 0;
    std::optional<int> k;
    std::optional<int> i;
    std::vector<CertificateTree> trees;

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

/// `a_raw`, `b_raw` are the sizes as the caller gave them.
CertificateDocument make_document(long long a_raw, long long b_raw, const SpanningTreePacking& packing);
CertificateDocument make_document(long long a_raw, long long b_raw, const SteinerWitness& witness);

/// Compact JSON with fixed key order and edges sorted within each tree.
std::string emit_json(const CertificateDocument& doc);

/// Parses the JSON schema above. Throws FormatError on anything else.
CertificateDocument parse_json(std::string_view text);

/// One undirected graph; each tree's edges share a color from a 12-entry
/// palette, and witness terminals are drawn as boxes.
std::string emit_dot(const CertificateDocument& doc);

inline constexpr int kPaletteSize = 12;
std::string_view palette_color(std::size_t tree_index) noexcept;

/// Structural check of a document: every tree must be a spanning tree
/// (packing) or a tree containing S_i (witness), and trees must be
/// pairwise edge-disjoint and, for witnesses, vertex-disjoint outside S_i.
ValidationReport verify_document(const CertificateDocument& doc);

}  // namespace kbip

#endif  // KBIP_CERTIFICATE_HPP

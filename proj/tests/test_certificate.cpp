#include "kbip/certificate.hpp"

#include "kbip/connectivity.hpp"

#include <doctest.h>

#include <map>
#include <regex>

using namespace kbip;

namespace {

std::map<std::string, int> color_counts(const std::string& dot)
{
    std::map<std::string, int> out;
    const std::regex edge(R"re(-- y\d+ \[color="(#[0-9a-f]{6})"\])re");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it)
        ++out[(*it)[1]];
    return out;
}

}  // namespace

TEST_CASE("packing JSON for K_{2,2}")
{
    const CertificateDocument doc = make_document(2, 2, build_packing(normalize(2, 2)));
    CHECK(emit_json(doc) == R"({"kind":"packing","a":2,"b":2,"trees":[{"edges":[[1,1],[1,2],[2,2]]}]})");
}

TEST_CASE("witness JSON keeps key order and classes")
{
    const CertificateDocument doc = make_document(2, 3, build_witness(normalize(2, 3), 3, 1));
    CHECK(emit_json(doc) ==
          R"({"kind":"witness","a":2,"b":3,"k":3,"i":1,"trees":[{"class":"A2","edges":[[1,3],[2,1],[2,2],[2,3]]},)"
          R"({"class":"A0","edges":[[1,1],[1,2]]}]})");
}

TEST_CASE("JSON round trip preserves documents")
{
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            const CertificateDocument pack = make_document(a, b, build_packing(normalize(a, b)));
            CHECK(parse_json(emit_json(pack)) == pack);
            const BipartiteOrder order = normalize(a, b);
            for (int k = 2; k <= a + b; ++k) {
                const CertificateDocument w =
                    make_document(a, b, build_witness(order, k, min_terminal_index(order, k)));
                const CertificateDocument back = parse_json(emit_json(w));
                CHECK(back == w);
                CHECK(emit_json(back) == emit_json(w));
            }
        }
}

TEST_CASE("swapped input keeps the caller's orientation")
{
    const CertificateDocument doc = make_document(4, 3, build_packing(normalize(4, 3)));
    CHECK(doc.a == 4);
    CHECK(doc.b == 3);
    for (const CertificateTree& t : doc.trees)
        for (const Edge& e : t.edges) {
            CHECK(e.x <= 4);
            CHECK(e.y <= 3);
        }
    CHECK(verify_document(doc).ok());

    // Three terminals on the caller's a side, which is the larger side.
    const BipartiteOrder order = normalize(4, 3);
    const CertificateDocument w = make_document(4, 3, build_witness(order, 5, 2));
    CHECK(w.i == 3);
    CHECK(verify_document(w).ok());
}

TEST_CASE("verify_document reports injected faults")
{
    CertificateDocument doc = make_document(3, 4, build_packing(normalize(3, 4)));
    REQUIRE(verify_document(doc).ok());

    SUBCASE("edge reused across trees")
    {
        doc.trees[1].edges[0] = doc.trees[0].edges[0];
        const ValidationReport r = verify_document(doc);
        REQUIRE_FALSE(r.ok());
        CHECK(r.first().kind == ViolationKind::EdgeOverlap);
    }
    SUBCASE("duplicated edge appended to another tree")
    {
        doc.trees[1].edges.push_back(doc.trees[0].edges[0]);
        const ValidationReport r = verify_document(doc);
        REQUIRE_FALSE(r.ok());
        CHECK(r.first().kind == ViolationKind::EdgeOverlap);
        CHECK(r.first().detail.find("from tree 1") != std::string::npos);
    }
    SUBCASE("not spanning")
    {
        doc.trees[0].edges.pop_back();
        const ValidationReport r = verify_document(doc);
        REQUIRE_FALSE(r.ok());
        CHECK(r.first().kind == ViolationKind::BadTree);
    }
    SUBCASE("impossible terminal set")
    {
        CertificateDocument w = make_document(3, 4, build_witness(normalize(3, 4), 5, 2));
        w.i = 4;
        const ValidationReport r = verify_document(w);
        REQUIRE_FALSE(r.ok());
        CHECK(r.first().kind == ViolationKind::WrongTerminals);
    }
}

TEST_CASE("parse_json rejects malformed documents")
{
    CHECK_THROWS_AS(parse_json("not json"), FormatError);
    CHECK_THROWS_AS(parse_json(R"({"kind":"tree","a":1,"b":1,"trees":[]})"), FormatError);
    CHECK_THROWS_AS(parse_json(R"({"kind":"packing","a":0,"b":1,"trees":[]})"), FormatError);
    CHECK_THROWS_AS(parse_json(R"({"kind":"witness","a":2,"b":2,"trees":[]})"), FormatError);
    CHECK_THROWS_AS(parse_json(R"({"kind":"packing","a":2,"b":2,"trees":[{"edges":[[1]]}]})"), FormatError);
    CHECK_THROWS_AS(parse_json(R"({"kind":"packing","a":2,"b":2,"trees":[{"class":"B","edges":[]}]})"),
                    FormatError);
}

TEST_CASE("DOT export")
{
    SUBCASE("K_{2,2}: three edges, one color")
    {
        const std::string dot = emit_dot(make_document(2, 2, build_packing(normalize(2, 2))));
        const auto counts = color_counts(dot);
        REQUIRE(counts.size() == 1);
        CHECK(counts.at(std::string(palette_color(0))) == 3);
        CHECK(dot.rfind("graph ", 0) == 0);
    }
    SUBCASE("K_{3,4}: two trees of six edges")
    {
        const std::string dot = emit_dot(make_document(3, 4, build_packing(normalize(3, 4))));
        const auto counts = color_counts(dot);
        REQUIRE(counts.size() == 2);
        CHECK(counts.at(std::string(palette_color(0))) == 6);
        CHECK(counts.at(std::string(palette_color(1))) == 6);
    }
    SUBCASE("witness terminals are boxes")
    {
        const std::string dot = emit_dot(make_document(2, 3, build_witness(normalize(2, 3), 3, 1)));
        int edges = 0;
        for (const auto& [color, n] : color_counts(dot))
            edges += n;
        CHECK(edges == 6);
        CHECK(dot.find("x1 [shape=box];") != std::string::npos);
        CHECK(dot.find("y1 [shape=box];") != std::string::npos);
        CHECK(dot.find("y2 [shape=box];") != std::string::npos);
        CHECK(dot.find("x2 [shape=box];") == std::string::npos);
        CHECK(dot.find("y3 [shape=box];") == std::string::npos);
    }
    SUBCASE("palette cycles after twelve trees")
    {
        CHECK(palette_color(12) == palette_color(0));
        CHECK(palette_color(13) == palette_color(1));
    }
}

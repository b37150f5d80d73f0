#include <gtest/gtest.h>

#include <random>

#include "evenweave/constructions.hpp"
#include "evenweave/io.hpp"
#include "evenweave/unparalleled.hpp"

using namespace evenweave;

namespace
{

Vertex random_vertex(std::mt19937& rng, int grammar)
{
    std::uniform_int_distribution<int> n(0, 60);
    switch (grammar) {
    case 0:
        return Vertex::residue(n(rng));
    case 1:
        return Vertex::dihedral(n(rng), static_cast<int>(rng() % 2));
    default:
        return Vertex::bi(n(rng), static_cast<int>(rng() % 2));
    }
}

std::vector<Vertex> distinct_vertices(std::mt19937& rng, int grammar, std::size_t count)
{
    std::set<Vertex> seen;
    std::vector<Vertex> out;
    if (grammar != 2 && rng() % 2) {
        out = {Vertex::infty(), Vertex::infty_prime()};
        seen.insert(out.begin(), out.end());
    }
    while (out.size() < count) {
        const auto v = random_vertex(rng, grammar);
        if (seen.insert(v).second)
            out.push_back(v);
    }
    return out;
}

SystemDocument random_document(std::mt19937& rng)
{
    SystemDocument d;
    const int grammar = static_cast<int>(rng() % 3);
    d.t = 2 + static_cast<int>(rng() % 4);
    const std::size_t len = static_cast<std::size_t>(2 * d.t);
    if (rng() % 3 == 0) {
        std::vector<Provenance> choices{{Construction::int1, {{"t", d.t}}},
                                        {Construction::main3, {{"t", 7}, {"v", 70}}},
                                        {Construction::generic, {{"t", 9}}}};
        d.provenance = choices[rng() % choices.size()];
    }
    std::vector<Vertex> pool;
    if (grammar == 2) {
        CompleteBipartite b;
        while (b.part_x.empty() || b.part_y.empty()) {
            b = {};
            for (const auto& v : distinct_vertices(rng, 2, 2 * len + rng() % 8))
                (v.side() == 0 ? b.part_x : b.part_y).push_back(v);
        }
        d.host = b;
        // a cycle alternating x and y
        for (int k = 0; k < 1 + static_cast<int>(rng() % 5); ++k) {
            if (b.part_x.size() < len / 2 || b.part_y.size() < len / 2)
                break;
            auto xs = b.part_x, ys = b.part_y;
            std::shuffle(xs.begin(), xs.end(), rng);
            std::shuffle(ys.begin(), ys.end(), rng);
            std::vector<Vertex> c;
            for (std::size_t i = 0; i < len / 2; ++i) {
                c.push_back(xs[i]);
                c.push_back(ys[i]);
            }
            d.cycles.emplace_back(c);
        }
        if (rng() % 2)
            d.anchors = b.part_x;
    } else {
        CompleteMinusFactor k;
        k.vertices = distinct_vertices(rng, grammar, len + 2 * (rng() % 5));
        if (k.vertices.size() % 2)
            k.vertices.pop_back();
        if (rng() % 2) {
            std::vector<Edge> f;
            for (std::size_t i = 0; i + 1 < k.vertices.size(); i += 2)
                f.push_back(Edge::make(k.vertices[i], k.vertices[i + 1]));
            k.factor = f;
        }
        for (int c = 0; c < static_cast<int>(rng() % 6); ++c) {
            auto vs = k.vertices;
            std::shuffle(vs.begin(), vs.end(), rng);
            vs.resize(len);
            d.cycles.emplace_back(vs);
        }
        if (rng() % 3 == 0)
            d.anchors = std::vector<Vertex>(k.vertices.begin(), k.vertices.begin() + 3);
        d.host = std::move(k);
    }
    return d;
}

} // namespace

TEST(Render, Examples)
{
    const Cycle c({Vertex::infty(), Vertex::residue(0), Vertex::residue(2), Vertex::infty_prime(), Vertex::residue(10),
                   Vertex::residue(8)});
    EXPECT_EQ(detail::join_vertices(c.vertices()), "inf,0,2,inf',10,8");
    const auto s3 = bipartite_intersecting_2t(3);
    const auto c0 = detail::bipartite_cycle(strong3_table[0]);
    EXPECT_EQ(detail::join_vertices(c0.vertices()), "0@0,0@1,1@0,1@1,2@0,2@1");
    const auto text = render_text(to_document(s3));
    EXPECT_NE(text.find("\n0@0,0@1,1@0,1@1,2@0,2@1\n"), std::string::npos);
    EXPECT_EQ(to_string(Vertex::dihedral(3, 1)), "x^3*l");
    EXPECT_EQ(to_string(Vertex::dihedral(0, 0)), "x^0");
}

TEST(Render, TextLayout)
{
    const auto text = render_text(to_document(dihedral_four_cycle_system(2)));
    EXPECT_EQ(text.substr(0, text.find('\n')), "evenweave/1");
    EXPECT_NE(text.find("\nprovenance four(s=2)\n"), std::string::npos);
    EXPECT_NE(text.find("\ncycles 6\n"), std::string::npos);
}

TEST(Parse, MalformedTokenPosition)
{
    const auto good = render_text(to_document(dihedral_four_cycle_system(2)));
    const auto cycles_at = good.find("cycles 6\n") + 9;
    auto bad = good;
    bad.insert(cycles_at, "x^,");  // first cycle line now starts with "x^"
    try {
        parse_text(bad);
        FAIL() << "no error";
    } catch (const ParseError& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < cycles_at; ++i)
            line += good[i] == '\n';
        EXPECT_EQ(e.line, line);
        EXPECT_EQ(e.column, 1u);
        EXPECT_EQ(e.token, "x^");
    }

    try {
        parse_text("evenweave/1\nhost complete-minus-factor 4\nt 2\nprovenance -\nvertices 0,1,x^,3\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 5u);
        EXPECT_EQ(e.column, 14u);
        EXPECT_EQ(e.token, "x^");
    }
}

TEST(Parse, Rejects)
{
    EXPECT_THROW(parse_text(""), ParseError);
    EXPECT_THROW(parse_text("evenweave/2\n"), ParseError);
    EXPECT_THROW(parse_json("{\"format\": \"evenweave/1\""), ParseError);
    EXPECT_THROW(parse_json("{\"format\": \"other\"}"), ParseError);
    auto text = render_text(to_document(dihedral_four_cycle_system(2)));
    text += "x^0,x^1\n";
    EXPECT_THROW(parse_text(text), ParseError);
    EXPECT_FALSE(parse_vertex("x^"));
    EXPECT_FALSE(parse_vertex("-1"));
    EXPECT_FALSE(parse_vertex("3@2"));
    EXPECT_FALSE(parse_vertex("inf''"));
}

TEST(RoundTrip, RandomDocuments)
{
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const auto d = random_document(rng);
        const auto text = render_text(d);
        ASSERT_EQ(parse_text(text), d) << text;
        ASSERT_EQ(render_text(parse_text(text)), text);
        const auto json = render_json(d);
        ASSERT_EQ(parse_json(json), d) << json;
        ASSERT_EQ(parse_document(json), d);
        ASSERT_EQ(parse_document(text), d);
    }
}

TEST(RoundTrip, BuiltSystems)
{
    for (auto [v, t] : std::vector<std::pair<int, int>>{{8, 2}, {24, 3}, {42, 7}, {20, 5}}) {
        const auto d = to_document(build_unparalleled(v, t).system);
        EXPECT_EQ(parse_text(render_text(d)), d);
        EXPECT_EQ(parse_json(render_json(d)), d);
        EXPECT_TRUE(check_decomposition(parse_text(render_text(d)).system()).passed);
    }
}

TEST(Json, Fields)
{
    const auto j = to_json(to_document(bipartite_intersecting_2t(3)));
    EXPECT_EQ(j["format"], "evenweave/1");
    EXPECT_EQ(j["host"]["kind"], "complete-bipartite");
    EXPECT_EQ(j["t"], 3);
    EXPECT_EQ(j["provenance"], "strong3(t=3)");
    EXPECT_EQ(j["cycles"].size(), 6u);
    EXPECT_EQ(j["anchors"].size(), 6u);
}

TEST(Render, Deterministic)
{
    const auto a = render_json(to_document(build_unparalleled(36, 3).system));
    const auto b = render_json(to_document(build_unparalleled(36, 3).system));
    EXPECT_EQ(a, b);
}

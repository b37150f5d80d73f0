#include <gtest/gtest.h>

#include "evenweave/constructions.hpp"
#include "evenweave/glue.hpp"
#include "evenweave/unparalleled.hpp"

using namespace evenweave;

namespace
{

std::vector<Vertex> labels(int from, int count)
{
    std::vector<Vertex> out;
    for (int k = 0; k < count; ++k)
        out.push_back(Vertex::residue(from + k));
    return out;
}

// K_{X,Y} with |X| = |Y| = 2m into 4-cycles on pairs {x_2a, x_2a+1} x {y_2b, y_2b+1}
LabeledSystem four_cycle_block(const std::vector<Vertex>& x, const std::vector<Vertex>& y)
{
    LabeledSystem out;
    for (std::size_t a = 0; a + 1 < x.size(); a += 2)
        for (std::size_t b = 0; b + 1 < y.size(); b += 2)
            out.system.cycles.push_back(Cycle({x[a], y[b], x[a + 1], y[b + 1]}));
    out.system.host = CompleteBipartite{x, y};
    out.vertex_set = x;
    out.vertex_set.insert(out.vertex_set.end(), y.begin(), y.end());
    return out;
}

} // namespace

TEST(Relabel, Identity)
{
    const auto s = intersecting_cs_4t(4);
    VertexMap id;
    for (const auto& v : s.vertex_set)
        id.emplace(v, v);
    const auto r = relabel(s, id);
    auto sorted = s.system.cycles;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(r.system.cycles, sorted);
    EXPECT_TRUE(check_decomposition(r.system).passed);
    EXPECT_EQ(r.vertex_set, s.vertex_set);
    EXPECT_EQ(r.anchors, s.anchors);
}

TEST(Relabel, FreshSideOneKeepsAnchors)
{
    const auto s = bipartite_intersecting_2t(3);
    VertexMap f;
    for (const auto& v : s.vertex_set)
        f.emplace(v, v.side() == 0 ? v : Vertex::bi(100 + v.a, 1));
    const auto r = relabel(s, f);
    EXPECT_EQ(r.anchor_check, AnchorCheck::inherited);
    EXPECT_TRUE(check_intersecting(r.system, r.anchors).passed);
    EXPECT_TRUE(check_decomposition(r.system).passed);
}

TEST(Relabel, MovingAnchorsForcesRecheck)
{
    const auto s = bipartite_intersecting_2t(3);
    VertexMap f;
    for (const auto& v : s.vertex_set)
        f.emplace(v, v);
    f[Vertex::bi(0, 0)] = Vertex::bi(1, 0);
    f[Vertex::bi(1, 0)] = Vertex::bi(0, 0);
    const auto r = relabel(s, f);
    EXPECT_EQ(r.anchor_check, AnchorCheck::verified);
}

TEST(Relabel, Rejects)
{
    const auto s = bipartite_intersecting_2t(3);
    VertexMap partial{{Vertex::bi(0, 0), Vertex::bi(0, 0)}};
    EXPECT_THROW(relabel(s, partial), InvalidArgument);
    VertexMap squash;
    for (const auto& v : s.vertex_set)
        squash.emplace(v, Vertex::residue(0));
    EXPECT_THROW(relabel(s, squash), InvalidArgument);
}

TEST(Glue, TwoCS8)
{
    const auto base = dihedral_four_cycle_system(2);
    const auto u = relabel(base, consecutive_labels(base, 0));
    const auto w = relabel(base, consecutive_labels(base, 8));
    const auto x = labels(0, 8);
    const auto y = labels(8, 8);
    const auto f = glue(u, w, {x}, {y}, {{0, 0, four_cycle_block(x, y)}}, {Construction::main1, {{"t", 2}}});
    EXPECT_EQ(f.system.cycles.size(), 28u);
    EXPECT_EQ(f.system.cycles.size(), 16u * 14 / 8);
    EXPECT_TRUE(check_decomposition(f.system).passed);

    const auto missing = glue(u, w, {x}, {y}, {}, {Construction::main1, {{"t", 2}}});
    const auto r = check_decomposition(missing.system);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.uncovered.size(), 64u);
}

TEST(Glue, MissingBlockLeavesExactlyItsEdges)
{
    const auto u = relabel(intersecting_cs_4t(3), consecutive_labels(intersecting_cs_4t(3), 0));
    const auto inner = build_unparalleled(24, 3).system;
    const auto w = relabel(inner, consecutive_labels(inner, 12));
    const std::vector<std::vector<Vertex>> xs{labels(0, 6), labels(6, 6)};
    std::vector<std::vector<Vertex>> ys;
    for (int k = 0; k < 4; ++k)
        ys.push_back(labels(12 + 6 * k, 6));
    std::vector<GlueBlock> blocks;
    const auto strong3 = bipartite_intersecting_2t(3);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto placed = detail::place_blocks(strong3, i, xs[i], ys);
        blocks.insert(blocks.end(), placed.begin(), placed.end());
    }
    const auto f = glue(u, w, xs, ys, blocks, {Construction::main1, {{"t", 3}, {"v", 36}}});
    EXPECT_TRUE(check_decomposition(f.system).passed);
    EXPECT_EQ(f.system.cycles.size(), 36u * 34 / 12);

    for (std::size_t drop = 0; drop < blocks.size(); ++drop) {
        auto fewer = blocks;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto g = glue(u, w, xs, ys, fewer, {Construction::main1, {{"t", 3}, {"v", 36}}});
        EXPECT_EQ(check_decomposition(g.system).uncovered.size(), 36u);
    }
}

TEST(Glue, Associative)
{
    // (U + W1) + W2 and U + (W1 + W2) give the same cycles when the blocks agree
    const auto base = dihedral_four_cycle_system(2);
    const auto u = relabel(base, consecutive_labels(base, 0));
    const auto w1 = relabel(base, consecutive_labels(base, 8));
    const auto w2 = relabel(base, consecutive_labels(base, 16));
    const auto a = labels(0, 8), b = labels(8, 8), c = labels(16, 8);
    const Provenance p{Construction::main1, {{"t", 2}}};

    const auto left_inner = glue(u, w1, {a}, {b}, {{0, 0, four_cycle_block(a, b)}}, p);
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const auto left = glue(left_inner, w2, {a, b}, {c},
                           {{0, 0, four_cycle_block(a, c)}, {1, 0, four_cycle_block(b, c)}}, p);

    const auto right_inner = glue(w1, w2, {b}, {c}, {{0, 0, four_cycle_block(b, c)}}, p);
    auto bc = b;
    bc.insert(bc.end(), c.begin(), c.end());
    const auto right = glue(u, right_inner, {a}, {b, c},
                            {{0, 0, four_cycle_block(a, b)}, {0, 1, four_cycle_block(a, c)}}, p);

    EXPECT_EQ(left.system.cycles, right.system.cycles);
    EXPECT_TRUE(check_decomposition(left.system).passed);
}

TEST(Glue, Rejects)
{
    const auto base = dihedral_four_cycle_system(2);
    const auto u = relabel(base, consecutive_labels(base, 0));
    const auto w = relabel(base, consecutive_labels(base, 8));
    const Provenance p{Construction::main1, {{"t", 2}}};
    EXPECT_THROW(glue(u, u, {labels(0, 8)}, {labels(0, 8)}, {}, p), InvalidArgument);
    EXPECT_THROW(glue(u, w, {labels(0, 6), labels(6, 2)}, {labels(8, 8)}, {}, p), InvalidArgument);
    EXPECT_THROW(glue(u, w, {labels(0, 8)}, {labels(8, 4)}, {}, p), InvalidArgument);
    const auto x = labels(0, 8), y = labels(8, 8);
    EXPECT_THROW(glue(u, w, {x}, {y}, {{0, 0, four_cycle_block(y, x)}, {0, 0, four_cycle_block(x, y)}}, p),
                 InvalidArgument);
}

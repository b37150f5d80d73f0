#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "evenweave/constructions.hpp"
#include "evenweave/cycle.hpp"

using namespace evenweave;

namespace
{

Cycle residue_cycle(std::initializer_list<int> xs)
{
    std::vector<Vertex> vs;
    for (int x : xs)
        vs.push_back(Vertex::residue(x));
    return Cycle(vs);
}

std::set<int> support_of(const DiffMultiset& d)
{
    std::set<int> out;
    for (const auto& g : d.support())
        out.insert(g.j);
    return out;
}

} // namespace

TEST(Delta, Int2SecondCycle)
{
    const auto z = GroupSpec::cyclic(16);
    const auto d = delta(residue_cycle({0, 3, 8, 7, 14, 4}), z);
    EXPECT_TRUE(d.is_set());
    std::set<int> want;
    for (int i = 0; i < 16; ++i)
        if (i != 0 && i != 2 && i != 14 && i != 8)
            want.insert(i);
    EXPECT_EQ(support_of(d), want);
}

TEST(Delta, SingleEdgePath)
{
    const auto d = delta(Path({Vertex::residue(0), Vertex::residue(1)}), GroupSpec::cyclic(16));
    EXPECT_EQ(support_of(d), (std::set<int>{1, 15}));
    EXPECT_EQ(d.total(), 2u);
}

TEST(Delta, InfinityEdgesContributeNothing)
{
    const auto g = GroupSpec::dihedral(2);
    const Cycle c({Vertex::infty(), Vertex::of(g.identity()), Vertex::infty_prime(), Vertex::of(g.element(1, 1))});
    EXPECT_TRUE(delta(c, g).empty());
}

TEST(Delta, TranslationInvariant)
{
    std::mt19937 rng(7);
    std::vector<GroupSpec> groups{GroupSpec::cyclic(16), GroupSpec::cyclic(30), GroupSpec::dihedral(3),
                                  GroupSpec::dihedral(6)};
    for (const auto& g : groups) {
        for (int trial = 0; trial < 40; ++trial) {
            auto es = g.elements();
            std::shuffle(es.begin(), es.end(), rng);
            std::vector<Vertex> vs;
            for (int k = 0; k < 5; ++k)
                vs.push_back(Vertex::of(es[static_cast<std::size_t>(k)]));
            const Cycle c(vs);
            for (const auto& a : g.elements())
                ASSERT_EQ(delta(translate(c, a), g), delta(c, g));
        }
    }
}

TEST(OrientedDelta, FourCycle)
{
    const Cycle c({Vertex::bi(0, 0), Vertex::bi(0, 1), Vertex::bi(1, 0), Vertex::bi(3, 1)});
    EXPECT_EQ(support_of(oriented_delta(c, 5)), (std::set<int>{0, 4, 2, 3}));
}

TEST(OrientedDelta, Strong1CoversZ2t)
{
    for (int t = 4; t <= 16; t += 2) {
        const auto st = strong1_starter(t);
        const auto d = oriented_delta(st.cycles.at(0), 2 * t);
        EXPECT_TRUE(d.is_set()) << t;
        EXPECT_EQ(static_cast<int>(d.distinct()), 2 * t) << t;
    }
}

TEST(OrientedDelta, Strong2SecondCycle)
{
    for (int s = 4; s <= 10; ++s) {
        const int t = 2 * s + 1;
        const auto d = oriented_delta(strong2_starter(t).cycles.at(1), 4 * t);
        std::set<int> want;
        for (int i = 4 * s - 1; i <= 6 * s + 3; ++i)
            want.insert(i);
        for (int i = 6 * s + 7; i <= 8 * s + 3; ++i)
            want.insert(i);
        EXPECT_TRUE(d.is_set());
        EXPECT_EQ(support_of(d), want) << s;
    }
}

TEST(OrientedDelta, TranslationInvariant)
{
    std::mt19937 rng(3);
    for (int w = 4; w <= 40; w += 3) {
        std::vector<int> xs(static_cast<std::size_t>(w)), ys(static_cast<std::size_t>(w));
        std::iota(xs.begin(), xs.end(), 0);
        std::iota(ys.begin(), ys.end(), 0);
        std::shuffle(xs.begin(), xs.end(), rng);
        std::shuffle(ys.begin(), ys.end(), rng);
        std::vector<Vertex> vs;
        for (int k = 0; k < 2; ++k) {
            vs.push_back(Vertex::bi(xs[static_cast<std::size_t>(k)], 0));
            vs.push_back(Vertex::bi(ys[static_cast<std::size_t>(k)], 1));
        }
        const Cycle c(vs);
        const auto z = GroupSpec::cyclic(w);
        for (const auto& a : z.elements())
            ASSERT_EQ(oriented_delta(translate(c, a), w), oriented_delta(c, w));
    }
}

TEST(Translate, Identity)
{
    const auto c = residue_cycle({0, 3, 8, 7, 14, 4});
    EXPECT_EQ(translate(c, GroupSpec::cyclic(16).identity()), c);
}

TEST(Translate, FourCyclesFixedByLambda)
{
    for (int s = 2; s <= 8; ++s) {
        const auto st = dihedral_four_starter(s);
        for (std::size_t i = 1; i < st.cycles.size(); ++i)
            EXPECT_EQ(translate(st.cycles[i], st.lambda), st.cycles[i]);
    }
}

TEST(Translate, Int2FirstCycleFixedBy8)
{
    const Cycle c({Vertex::infty(), Vertex::residue(0), Vertex::residue(2), Vertex::infty_prime(),
                   Vertex::residue(10), Vertex::residue(8)});
    EXPECT_EQ(translate(c, GroupSpec::cyclic(16).element(8)), c);
}

TEST(Orbit, Sizes)
{
    const auto g = GroupSpec::dihedral(2);
    const Cycle c0({Vertex::infty(), Vertex::of(g.element(1)), Vertex::infty_prime(), Vertex::of(g.element(1, 1))});
    const auto o = orbit(c0, g);
    EXPECT_EQ(o.size(), 3u);
    EXPECT_TRUE(o.is_short());

    const auto z = GroupSpec::cyclic(16);
    const auto long_one = orbit(residue_cycle({0, 3, 8, 7, 14, 4}), z);
    EXPECT_EQ(long_one.size(), 16u);
    EXPECT_FALSE(long_one.is_short());

    const Cycle c1({Vertex::infty(), Vertex::residue(0), Vertex::residue(2), Vertex::infty_prime(),
                    Vertex::residue(10), Vertex::residue(8)});
    const auto short_one = orbit(c1, z);
    EXPECT_EQ(short_one.size(), 8u);
    EXPECT_EQ(short_one.stabilizer, 2u);
}

TEST(Cycle, CanonicalForm)
{
    EXPECT_EQ(residue_cycle({3, 1, 2}), residue_cycle({1, 3, 2}));
    EXPECT_EQ(residue_cycle({0, 1, 2, 3}), residue_cycle({2, 1, 0, 3}));
    EXPECT_NE(residue_cycle({0, 1, 2, 3}), residue_cycle({0, 2, 1, 3}));
}

TEST(Cycle, Rejects)
{
    EXPECT_THROW(residue_cycle({0, 1}), InvalidArgument);
    EXPECT_THROW(residue_cycle({0, 1, 0}), InvalidArgument);
    EXPECT_THROW(Cycle({Vertex::bi(0, 0), Vertex::bi(1, 0), Vertex::bi(2, 1), Vertex::bi(3, 1)}), InvalidArgument);
    EXPECT_THROW(Cycle({Vertex::bi(0, 0), Vertex::residue(1), Vertex::bi(2, 1)}), InvalidArgument);
}

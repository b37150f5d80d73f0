#include <gtest/gtest.h>

#include "evenweave/constructions.hpp"
#include "evenweave/starters.hpp"
#include "evenweave/verifier.hpp"

using namespace evenweave;

TEST(Pyramidal, FourStarterS2)
{
    const auto r = validate_pyramidal(dihedral_four_starter(2));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.short_count, 2);
    EXPECT_EQ(r.long_count, 0);
    EXPECT_EQ(r.bound, 2);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(Pyramidal, Int2T3)
{
    const auto r = validate_pyramidal(int2_starter(3));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.short_count, 1);
    EXPECT_EQ(r.long_count, 1);
    EXPECT_EQ(r.bound, 3);
}

TEST(Pyramidal, FourStarterMissingCycleFailsCoverage)
{
    auto st = dihedral_four_starter(3);
    st.cycles.erase(st.cycles.begin() + 1);
    const auto r = validate_pyramidal(st);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.coverage_ok);
    EXPECT_TRUE(r.infinity_ok);
    const auto& g = st.group;
    EXPECT_NE(std::find(r.missing.begin(), r.missing.end(), g.element(2)), r.missing.end());
    EXPECT_NE(std::find(r.missing.begin(), r.missing.end(), g.element(-2)), r.missing.end());
}

TEST(Pyramidal, FourStarterDeltaCoversAllButIdentityAndLambda)
{
    for (int s = 2; s <= 10; ++s) {
        const auto st = dihedral_four_starter(s);
        std::set<GroupElement> seen;
        for (std::size_t i = 1; i < st.cycles.size(); ++i)
            for (const auto& d : delta(st.cycles[i], st.group).support())
                seen.insert(d);
        for (const auto& d : st.group.elements())
            EXPECT_EQ(seen.count(d) == 1, d != st.group.identity() && d != st.lambda) << to_string(d);
    }
}

TEST(Pyramidal, Expand)
{
    const auto four = expand_pyramidal(dihedral_four_starter(2));
    EXPECT_EQ(four.cycles.size(), 6u);
    EXPECT_EQ(four.cycles.size() * 4, 8u * 6 / 2);

    const auto int2 = expand_pyramidal(int2_starter(3));
    EXPECT_EQ(int2.cycles.size(), 24u);
    const auto int1 = expand_pyramidal(int1_starter(3));
    EXPECT_EQ(int1.cycles.size(), 10u);
    for (const auto& c : int1_starter(3).cycles)
        EXPECT_EQ(orbit(c, GroupSpec::cyclic(10)).size(), 5u);
}

TEST(Pyramidal, ExpansionIsDecomposition)
{
    std::vector<PyramidalStarter> all;
    for (int s = 2; s <= 8; ++s)
        all.push_back(dihedral_four_starter(s));
    for (int t = 3; t <= 10; ++t)
        all.push_back(int1_starter(t));
    for (int t = 3; t <= 9; t += 2)
        all.push_back(int2_starter(t));
    for (const auto& st : all) {
        const auto sys = expand_pyramidal(st);
        EXPECT_TRUE(check_decomposition(sys).passed) << st.group.name();
        // edge count: cycles * 2t = v(v-2)/2
        const auto v = static_cast<std::size_t>(st.order());
        EXPECT_EQ(sys.cycles.size() * 2 * static_cast<std::size_t>(st.t), v * (v - 2) / 2);
        const Edge inf = Edge::make(Vertex::infty(), Vertex::infty_prime());
        for (const auto& c : sys.cycles)
            for (const auto& [p, q] : c.edges())
                ASSERT_NE(Edge::make(p, q), inf);
    }
}

TEST(Pyramidal, MutatedStarterRejected)
{
    for (int t = 3; t <= 8; ++t) {
        auto st = int1_starter(t);
        // swap one finite vertex for a fresh one
        const int n = st.group.order();
        std::vector<Vertex> vs(st.cycles[0].vertices().begin(), st.cycles[0].vertices().end());
        for (int cand = 0; cand < n; ++cand) {
            const auto v = Vertex::residue(cand);
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) {
                vs[1] = v;
                break;
            }
        }
        st.cycles[0] = Cycle(vs);
        EXPECT_FALSE(validate_pyramidal(st).passed()) << t;
        EXPECT_THROW(expand_pyramidal(st), StarterError<PyramidalReport>);
    }
}

TEST(Pyramidal, BadInfinityStructure)
{
    auto st = dihedral_four_starter(3);
    st.cycles.erase(st.cycles.begin());
    const auto r = validate_pyramidal(st);
    EXPECT_FALSE(r.infinity_ok);
    EXPECT_EQ(r.infty_cycles, 0);
}

TEST(Bipartite, Strong1AndStrong2)
{
    EXPECT_TRUE(validate_bipartite(strong1_starter(4)).passed());
    EXPECT_TRUE(validate_bipartite(strong2_starter(9)).passed());
}

TEST(Bipartite, TooFewDifferences)
{
    const BipartiteStarter st{{Cycle({Vertex::bi(0, 0), Vertex::bi(0, 1), Vertex::bi(1, 0), Vertex::bi(3, 1)})}, 5, 2};
    const auto r = validate_bipartite(st);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.missing.size(), 1u);
}

TEST(Bipartite, Expand)
{
    const auto s1 = expand_bipartite(strong1_starter(4));
    EXPECT_EQ(s1.cycles.size(), 8u);
    EXPECT_EQ(s1.cycles.size() * 8, 64u);
    EXPECT_TRUE(check_decomposition(s1).passed);

    const auto s2 = expand_bipartite(strong2_starter(7));
    EXPECT_EQ(s2.cycles.size(), 56u);
    EXPECT_EQ(s2.cycles.size() * 14, 28u * 28);
    EXPECT_TRUE(check_decomposition(s2).passed);

    const auto s6 = expand_bipartite(strong1_starter(6));
    EXPECT_EQ(s6.cycles.size(), 12u);
    for (const auto& c : s6.cycles)
        EXPECT_EQ(c.length(), 12u);
    EXPECT_TRUE(check_decomposition(s6).passed);
}

TEST(Bipartite, PerturbedVertexRejected)
{
    auto st = strong1_starter(8);
    std::vector<Vertex> vs(st.cycles[0].vertices().begin(), st.cycles[0].vertices().end());
    for (int z = 0; z < st.w; ++z) {
        const auto cand = Vertex::bi(z, vs[0].side());
        if (std::find(vs.begin(), vs.end(), cand) == vs.end()) {
            vs[0] = cand;
            break;
        }
    }
    st.cycles[0] = Cycle(vs);
    EXPECT_FALSE(validate_bipartite(st).passed());
}

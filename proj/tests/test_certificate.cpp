#include <gtest/gtest.h>

#include <algorithm>

#include "evenweave/unparalleled.hpp"

using namespace evenweave;

namespace
{

bool has_failure(const CertificateReport& r, const std::string& node_part, const std::string& claim)
{
    return std::any_of(r.failures.begin(), r.failures.end(), [&](const CertificateFailure& f) {
        return f.node.find(node_part) != std::string::npos && f.claim == claim;
    });
}

CertificateNode* find_node(CertificateNode& n, const std::string& label)
{
    if (n.label == label)
        return &n;
    for (auto& ch : n.children)
        if (auto* hit = find_node(ch, label))
            return hit;
    return nullptr;
}

// K_{8,8} as two K_{4,4} Hamilton decompositions on A x C and B x D, and on A x D and B x C:
// the cycles on A x C and B x D share no X vertex
std::vector<Cycle> disjoint_k88(const std::vector<Vertex>& x, const std::vector<Vertex>& y)
{
    std::vector<Cycle> out;
    for (int hx = 0; hx < 2; ++hx)
        for (int hy = 0; hy < 2; ++hy)
            for (int a : {0, 2}) {
                std::vector<Vertex> vs;
                for (int i = 0; i < 4; ++i) {
                    vs.push_back(x[static_cast<std::size_t>(4 * hx + i)]);
                    vs.push_back(y[static_cast<std::size_t>(4 * hy + (i + a) % 4)]);
                }
                out.emplace_back(vs);
            }
    return out;
}

} // namespace

TEST(Certificate, Main1T3V24)
{
    const auto b = build_unparalleled(24, 3);
    const auto r = check_certificate(b.certificate, b.system);
    EXPECT_TRUE(r.passed);
    ASSERT_FALSE(r.tree.empty());
    EXPECT_NE(r.tree.front().find("main1(t=3,v=24)"), std::string::npos);
    auto count = [&](const std::string& s) {
        return std::count_if(r.tree.begin(), r.tree.end(), [&](const std::string& l) { return l.find(s) != std::string::npos; });
    };
    EXPECT_EQ(count("main1(t=3,v=18)"), 1);
    EXPECT_EQ(count("int1(t=3)"), 1);
    EXPECT_EQ(count("strong3(t=3)"), 5);
    EXPECT_EQ(count("hamiltonian(v=6)"), 2);
    // the base leaf at v = 12 is searched exhaustively
    const auto leaf = std::find_if(r.tree.begin(), r.tree.end(), [](const std::string& l) { return l.find("int1") != std::string::npos; });
    EXPECT_NE(leaf->find("exhaustive=ok"), std::string::npos);
}

TEST(Certificate, Main3BaseIsSingleLeaf)
{
    const auto b = build_unparalleled(42, 7);
    EXPECT_EQ(b.system.provenance.tag(), "int2(t=7)");
    EXPECT_TRUE(b.certificate.root.children.empty());
    const auto r = check_certificate(b.certificate, b.system);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.nodes_checked, 1u);
}

TEST(Certificate, FourLeaf)
{
    const auto b = build_unparalleled(8, 2);
    EXPECT_EQ(b.system.provenance.tag(), "four(s=2)");
    const auto r = check_certificate(b.certificate, b.system);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(b.certificate.root.claims.at("mirror"), true);
    EXPECT_EQ(b.certificate.root.claims.at("exhaustive"), true);
}

TEST(Certificate, MirrorCondition)
{
    for (int s = 2; s <= 8; ++s)
        EXPECT_TRUE(mirror_condition(dihedral_four_cycle_system(s).system, GroupSpec::dihedral(s)));
}

TEST(Certificate, ForgedBlockFailsAtThatNode)
{
    auto b = build_unparalleled(24, 4);
    auto* block = find_node(b.certificate.root, "block[0,0]");
    ASSERT_NE(block, nullptr);
    ASSERT_EQ(block->role, NodeRole::anchored_block);
    ASSERT_TRUE(block->claims.at("intersecting"));

    const auto host = std::get<CompleteBipartite>(block->system.system.host);
    const auto old = block->system.system.cycles;
    auto forged = disjoint_k88(host.part_x, host.part_y);
    std::sort(forged.begin(), forged.end());
    ASSERT_TRUE(check_decomposition({forged, host}).passed);
    ASSERT_FALSE(check_intersecting(std::span<const Cycle>(forged), host.part_x).passed);
    block->system.system.cycles = forged;

    auto& root_cycles = b.certificate.root.system.system.cycles;
    for (const auto& c : old)
        root_cycles.erase(std::find(root_cycles.begin(), root_cycles.end(), c));
    root_cycles.insert(root_cycles.end(), forged.begin(), forged.end());
    std::sort(root_cycles.begin(), root_cycles.end());
    b.system = b.certificate.root.system;
    ASSERT_TRUE(check_decomposition(b.system.system).passed);

    const auto r = check_certificate(b.certificate, b.system);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(has_failure(r, "block[0,0]", "intersecting"));
    for (const auto& f : r.failures)
        EXPECT_EQ(f.node.find("block[0,1]"), std::string::npos) << f.node;
}

TEST(Certificate, WrongSubject)
{
    const auto b = build_unparalleled(24, 3);
    const auto other = build_unparalleled(24, 4);
    const auto r = check_certificate(b.certificate, other.system);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(has_failure(r, "main1", "subject"));
}

TEST(Certificate, DroppedCycleFails)
{
    auto b = build_unparalleled(30, 5);
    b.certificate.root.system.system.cycles.pop_back();
    b.system = b.certificate.root.system;
    const auto r = check_certificate(b.certificate, b.system);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(has_failure(r, "main1", "decomposition"));
}

TEST(Certificate, ForgedLeafSwap)
{
    // a leaf whose tag names a different construction
    auto b = build_unparalleled(12, 3);
    b.certificate.root.system.provenance = {Construction::int1, {{"t", 4}}};
    const auto r = check_certificate(b.certificate, b.system);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(has_failure(r, "int1", "base-construction"));
}

TEST(Certificate, AgreesWithSearchOnSmallSystems)
{
    for (int t = 2; t <= 8; ++t)
        for (int v = 4 * t; v <= 16; v += 2 * t) {
            const auto b = build_unparalleled(v, t);
            const auto r = check_certificate(b.certificate, b.system);
            const auto hunt = find_parallel_class(b.system.system);
            EXPECT_EQ(r.passed, hunt.status == ParallelClassStatus::none_exhaustive) << v << "," << t;
        }
}

TEST(Build, Admissibility)
{
    EXPECT_THROW(build_unparalleled(20, 3), InvalidArgument);
    EXPECT_THROW(build_unparalleled(6, 3), InvalidArgument);
    EXPECT_THROW(build_unparalleled(8, 1), InvalidArgument);
    try {
        build_unparalleled(20, 3);
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("v = 0 (mod 2t) and v > 2t > 2"), std::string::npos);
    }
}

TEST(Build, Routing)
{
    EXPECT_EQ(build_unparalleled(56, 7).system.provenance.tag(), "main2(t=7,v=56)");
    EXPECT_EQ(build_unparalleled(70, 7).system.provenance.tag(), "main3(t=7,v=70)");
    EXPECT_EQ(build_unparalleled(28, 7).system.provenance.tag(), "int1(t=7)");
    EXPECT_EQ(build_unparalleled(30, 5).system.provenance.tag(), "main1(t=5,v=30)");
    EXPECT_EQ(build_unparalleled(16, 2).system.provenance.tag(), "four(s=4)");
}

#ifndef EVENWEAVE_CONSTRUCTIONS_HPP
#define EVENWEAVE_CONSTRUCTIONS_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/group.hpp"
#include "evenweave/labeled.hpp"
#include "evenweave/paths.hpp"
#include "evenweave/starters.hpp"
#include "evenweave/verifier.hpp"

namespace evenweave
{

namespace detail
{

inline std::vector<Vertex> residues(const std::vector<int>& xs, int n)
{
    std::vector<Vertex> out;
    for (int x : xs)
        out.push_back(Vertex::residue(mod(x, n)));
    return out;
}

inline Vertex bi(int z, int side, int w) { return Vertex::bi(mod(z, w), side); }

inline LabeledSystem label_system(CycleSystem sys, Provenance prov, bool anchor_everything)
{
    LabeledSystem out;
    out.vertex_set = host_vertices(sys.host);
    if (const auto* b = std::get_if<CompleteBipartite>(&sys.host))
        out.anchors = b->part_x;
    else if (anchor_everything)
        out.anchors = out.vertex_set;
    out.system = std::move(sys);
    out.provenance = std::move(prov);
    if (out.anchors) {
        out.anchor_check = check_intersecting(out.system, out.anchors).passed ? AnchorCheck::verified
                                                                              : AnchorCheck::failed;
        if (out.anchor_check == AnchorCheck::failed)
            throw ConstructionError(out.provenance.tag() + " is not intersecting on its anchor set");
    }
    return out;
}

/// Parses "z_side,z_side,..." into a bipartite cycle.
inline Cycle bipartite_cycle(std::string_view spec)
{
    std::vector<Vertex> vs;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const auto tok = spec.substr(0, comma);
        const auto us = tok.find('_');
        int z = 0;
        for (char c : tok.substr(0, us))
            z = z * 10 + (c - '0');
        vs.push_back(Vertex::bi(z, tok.substr(us + 1) == "1" ? 1 : 0));
        if (comma == std::string_view::npos)
            break;
        spec = spec.substr(comma + 1);
    }
    return Cycle(std::move(vs));
}

} // namespace detail

// ---------------------------------------------------------------------------
// pyramidal starters

inline PyramidalStarter dihedral_four_starter(int s)
{
    if (s < 2)
        throw InvalidArgument("the dihedral construction needs s >= 2, got " + std::to_string(s));
    const auto g = GroupSpec::dihedral(s);
    const auto lambda = g.element(0, 1);
    PyramidalStarter st{{}, g, lambda, 2};
    st.cycles.emplace_back(std::vector<Vertex>{Vertex::infty(), Vertex::of(g.identity()), Vertex::infty_prime(),
                                               Vertex::of(g.element(1, 1))});
    for (int i = 1; i < s; ++i) {
        const auto xi = g.element(i);
        const auto xmi = g.element(-i);
        st.cycles.emplace_back(std::vector<Vertex>{Vertex::of(xi), Vertex::of(xmi), Vertex::of(compose(lambda, xi)),
                                                   Vertex::of(compose(lambda, xmi))});
    }
    return st;
}

inline PyramidalStarter int1_starter(int t, const PathsAB& p)
{
    const int n = 4 * t - 2;
    const int h = 2 * t - 1;
    std::vector<int> c1 = p.a;
    for (int x : p.a)
        c1.push_back(x + h);
    std::vector<Vertex> c2{Vertex::infty(), Vertex::residue(h)};
    for (int x : p.b)
        c2.push_back(Vertex::residue(mod(x, n)));
    c2.push_back(Vertex::infty_prime());
    for (auto it = p.b.rbegin(); it != p.b.rend(); ++it)
        c2.push_back(Vertex::residue(mod(*it + h, n)));
    c2.push_back(Vertex::residue(mod(2 * h, n)));
    const auto g = GroupSpec::cyclic(n);
    return {{Cycle(detail::residues(c1, n)), Cycle(std::move(c2))}, g, g.element(h), t};
}

inline PyramidalStarter int1_starter(int t)
{
    if (t < 3)
        throw InvalidArgument("CS(4t, 2t) needs t >= 3, got " + std::to_string(t));
    return int1_starter(t, paths_AB(t));
}

inline PyramidalStarter int2_starter(int t)
{
    if (t < 3 || t % 2 == 0)
        throw InvalidArgument("CS(6t, 2t) needs odd t >= 3, got " + std::to_string(t));
    if (t == 3) {
        const auto g = GroupSpec::cyclic(16);
        std::vector<Vertex> c1{Vertex::infty(),       Vertex::residue(0),  Vertex::residue(2),
                               Vertex::infty_prime(), Vertex::residue(10), Vertex::residue(8)};
        return {{Cycle(std::move(c1)), Cycle(detail::residues({0, 3, 8, 7, 14, 4}, 16))}, g, g.element(8), 3};
    }
    const int s = (t - 1) / 2;
    const int n = 12 * s + 4;
    const int shift = 6 * s + 2;
    std::vector<int> a{0};
    for (int k = 1; k < s; ++k) {
        a.push_back(k);
        a.push_back(-k);
    }
    a.push_back(3 * s + 5);

    std::vector<Vertex> c1{Vertex::infty()};
    for (int x : a)
        c1.push_back(Vertex::residue(mod(x, n)));
    c1.push_back(Vertex::infty_prime());
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        c1.push_back(Vertex::residue(mod(*it + shift, n)));

    std::vector<int> c2;
    for (int i = 0; i <= s + 1; ++i)
        detail::push_pair(c2, i, 10 * s + 5 - i);
    for (int j = s + 2; j <= 2 * s - 1; ++j)
        detail::push_pair(c2, j, 10 * s + 3 - j);
    detail::push_pair(c2, 2 * s, 8 * s + 1);

    const auto g = GroupSpec::cyclic(n);
    return {{Cycle(std::move(c1)), Cycle(detail::residues(c2, n))}, g, g.element(shift), t};
}

// ---------------------------------------------------------------------------
// bipartite starters

inline BipartiteStarter strong1_starter(int t)
{
    if (t < 4 || t % 2 != 0)
        throw InvalidArgument("the K_{2t,2t} starter needs even t >= 4, got " + std::to_string(t));
    const int s = t / 2;
    const int w = 2 * t;
    std::vector<Vertex> c;
    for (int i = 1; i <= s; ++i) {
        c.push_back(detail::bi(4 * s - i, 1, w));
        c.push_back(detail::bi(i, 0, w));
    }
    for (int j = 1; j <= s; ++j) {
        c.push_back(detail::bi(s - j, 1, w));
        c.push_back(detail::bi(3 * s - 1 + j, 0, w));
    }
    return {{Cycle(std::move(c))}, w, t};
}

inline BipartiteStarter strong2_starter(int t)
{
    if (t < 7 || t % 2 == 0)
        throw InvalidArgument("the K_{4t,4t} starter needs odd t >= 7, got " + std::to_string(t));
    const int s = (t - 1) / 2;
    const int w = 4 * t;
    auto bi = [w](int z, int side) { return detail::bi(z, side, w); };

    std::vector<Vertex> c0{bi(0, 0), bi(1, 1), bi(2 * s + 1, 0), bi(2 * s + 3, 1), bi(4 * s + 2, 0), bi(4 * s + 5, 1)};
    for (int i = 0; i <= 2 * s - 3; ++i) {
        c0.push_back(bi(6 * s + 3 - i, 0));
        c0.push_back(bi(6 * s + 7 + i, 1));
    }

    std::vector<Vertex> c1;
    if (s == 3) {
        const auto fixed = detail::bipartite_cycle("0_0,26_1,7_0,4_1,12_0,2_1,14_0,13_1,20_0,5_1,21_0,8_1,25_0,14_1");
        c1.assign(fixed.vertices().begin(), fixed.vertices().end());
    } else {
        c1 = {bi(6 * s + 3, 1), bi(0, 0),         bi(8 * s + 1, 1), bi(2 * s + 1, 0), bi(2 * s - 1, 1),
              bi(4 * s + 2, 0), bi(4 * s + 1, 1), bi(6 * s + 3, 0), bi(6 * s - 2, 1)};
        for (int i = 0; i <= s - 5; ++i) {
            c1.push_back(bi(8 * s + 3 - i, 0));
            c1.push_back(bi(6 * s + 6 + i, 1));
        }
        c1.push_back(bi(7 * s + 7, 0));
        c1.push_back(bi(5 * s, 1));
        c1.push_back(bi(7 * s + 6, 0));
        for (int j = 1; j <= s - 1; ++j) {
            c1.push_back(bi(3 * s + j, 1));
            c1.push_back(bi(7 * s + 6 - j, 0));
        }
    }
    return {{Cycle(std::move(c0)), Cycle(std::move(c1))}, w, t};
}

inline constexpr std::array<std::string_view, 6> strong3_table{
    "0_0,0_1,1_0,1_1,2_0,2_1", "2_0,0_1,3_0,1_1,4_0,3_1", "4_0,0_1,5_0,1_1,0_0,4_1",
    "0_0,3_1,3_0,4_1,1_0,5_1", "2_0,4_1,5_0,2_1,3_0,5_1", "1_0,2_1,4_0,5_1,5_0,3_1",
};

inline constexpr std::array<std::string_view, 10> strong5_table{
    "0_0,0_1,1_0,1_1,2_0,2_1,3_0,3_1,4_0,4_1", "2_0,0_1,3_0,1_1,4_0,2_1,5_0,3_1,6_0,4_1",
    "4_0,0_1,5_0,1_1,6_0,2_1,7_0,3_1,8_0,9_1", "6_0,0_1,7_0,1_1,8_0,2_1,9_0,3_1,0_0,8_1",
    "8_0,0_1,9_0,1_1,0_0,2_1,1_0,3_1,2_0,8_1", "1_0,5_1,2_0,6_1,3_0,7_1,4_0,8_1,7_0,9_1",
    "3_0,5_1,4_0,6_1,5_0,7_1,6_0,9_1,9_0,8_1", "5_0,5_1,6_0,6_1,7_0,7_1,8_0,4_1,1_0,8_1",
    "7_0,5_1,8_0,6_1,9_0,7_1,0_0,9_1,3_0,4_1", "9_0,5_1,0_0,6_1,1_0,7_1,2_0,9_1,5_0,4_1",
};

// ---------------------------------------------------------------------------
// systems

inline LabeledSystem dihedral_four_cycle_system(int s)
{
    auto sys = expand_pyramidal(dihedral_four_starter(s));
    return detail::label_system(std::move(sys), {Construction::four, {{"s", s}}}, false);
}

inline LabeledSystem intersecting_cs_4t(int t)
{
    if (t < 3)
        throw InvalidArgument("CS(4t, 2t) needs t >= 3, got " + std::to_string(t));
    const auto p = paths_AB(t);
    auto out = detail::label_system(expand_pyramidal(int1_starter(t, p)), {Construction::int1, {{"t", t}}}, true);
    if (!p.from_formula) {
        std::string note = "paths A, B searched for t=" + std::to_string(t) + ": A=(";
        for (std::size_t i = 0; i < p.a.size(); ++i)
            note += (i ? "," : "") + std::to_string(p.a[i]);
        note += ") B=(";
        for (std::size_t i = 0; i < p.b.size(); ++i)
            note += (i ? "," : "") + std::to_string(p.b[i]);
        out.notes.push_back(note + ")");
    }
    return out;
}

inline LabeledSystem intersecting_cs_6t(int t)
{
    return detail::label_system(expand_pyramidal(int2_starter(t)), {Construction::int2, {{"t", t}}}, true);
}

inline LabeledSystem bipartite_intersecting_2t(int t)
{
    if (t == 3 || t == 5) {
        CycleSystem sys{{}, bipartite_host(2 * t)};
        if (t == 3)
            for (auto row : strong3_table)
                sys.cycles.push_back(detail::bipartite_cycle(row));
        else
            for (auto row : strong5_table)
                sys.cycles.push_back(detail::bipartite_cycle(row));
        return detail::label_system(std::move(sys),
                                    {t == 3 ? Construction::strong3 : Construction::strong5, {{"t", t}}}, false);
    }
    if (t < 4 || t % 2 != 0)
        throw InvalidArgument("intersecting CS(K_{2t,2t}, 2t) is available for even t >= 4 and t in {3, 5}, got "
                              + std::to_string(t));
    return detail::label_system(expand_bipartite(strong1_starter(t)), {Construction::strong1, {{"t", t}}}, false);
}

inline LabeledSystem bipartite_intersecting_4t(int t)
{
    return detail::label_system(expand_bipartite(strong2_starter(t)), {Construction::strong2, {{"t", t}}}, false);
}

} // namespace evenweave

#endif

#ifndef EVENWEAVE_UNPARALLELED_HPP
#define EVENWEAVE_UNPARALLELED_HPP

#include <string>
#include <utility>
#include <vector>

#include "evenweave/certificate.hpp"
#include "evenweave/constructions.hpp"
#include "evenweave/error.hpp"
#include "evenweave/generic.hpp"
#include "evenweave/glue.hpp"
#include "evenweave/hamiltonian.hpp"
#include "evenweave/labeled.hpp"

namespace evenweave
{

struct BuildOptions
{
    std::size_t exhaustive_threshold = 24;
    SearchBudget budget{};
};

struct BuildResult
{
    LabeledSystem system;
    Certificate certificate;
};

/// Throws InvalidArgument unless an unparalleled CS(v, 2t) exists, i.e. v = 0 mod 2t and v > 2t > 2.
inline void check_admissible(int v, int t)
{
    const std::string why = "an unparalleled CS(v, 2t) exists if and only if v = 0 (mod 2t) and v > 2t > 2";
    if (t < 2)
        throw InvalidArgument("t = " + std::to_string(t) + " gives 2t <= 2: " + why);
    if (v <= 2 * t)
        throw InvalidArgument("v = " + std::to_string(v) + " is not larger than 2t = " + std::to_string(2 * t) + ": "
                              + why);
    if (v % (2 * t) != 0)
        throw InvalidArgument("v = " + std::to_string(v) + " is not a multiple of 2t = " + std::to_string(2 * t)
                              + ": " + why);
}

namespace detail
{

inline CertificateNode leaf(LabeledSystem sys)
{
    CertificateNode n;
    n.system = std::move(sys);
    return n;
}

inline std::vector<std::vector<Vertex>> chunks(const std::vector<Vertex>& vs, std::size_t size)
{
    std::vector<std::vector<Vertex>> out;
    for (std::size_t k = 0; k < vs.size(); k += size)
        out.emplace_back(vs.begin() + static_cast<std::ptrdiff_t>(k),
                         vs.begin() + static_cast<std::ptrdiff_t>(std::min(vs.size(), k + size)));
    return out;
}

/// Copies of a bipartite system with part X sent to `x` and part Y sent to each of `ys`.
/// The first copy is rechecked on its anchors; the others fix X and inherit the check.
inline std::vector<GlueBlock> place_blocks(const LabeledSystem& base, std::size_t i, const std::vector<Vertex>& x,
                                           const std::vector<std::vector<Vertex>>& ys)
{
    const auto& host = std::get<CompleteBipartite>(base.system.host);
    std::vector<GlueBlock> out;
    if (ys.empty())
        return out;
    VertexMap first;
    for (std::size_t k = 0; k < host.part_x.size(); ++k)
        first.emplace(host.part_x[k], x.at(k));
    for (std::size_t k = 0; k < host.part_y.size(); ++k)
        first.emplace(host.part_y[k], ys[0].at(k));
    out.push_back({i, 0, relabel(base, first)});
    for (std::size_t j = 1; j < ys.size(); ++j) {
        VertexMap fj;
        for (const auto& v : x)
            fj.emplace(v, v);
        for (std::size_t k = 0; k < ys[0].size(); ++k)
            fj.emplace(ys[0][k], ys[j].at(k));
        out.push_back({i, j, relabel(out.front().system, fj)});
    }
    return out;
}

/// One glue step: U on labels 0..u-1, W shifted to u..v-1.
inline CertificateNode glue_step(Provenance prov, const LabeledSystem& u_raw, CertificateNode inner,
                                 const std::vector<std::vector<Vertex>>& xparts_of_u, std::size_t ypart_size,
                                 const std::vector<std::pair<std::size_t, LabeledSystem>>& block_bases,
                                 std::size_t anchored_row)
{
    const LabeledSystem u = relabel(u_raw, consecutive_labels(u_raw, 0));
    const auto wmap = consecutive_labels(inner.system, static_cast<int>(u.order()));
    const LabeledSystem w = relabel(inner.system, wmap);
    const auto yparts = chunks(w.vertex_set, ypart_size);

    std::vector<GlueBlock> blocks;
    for (const auto& [row, base] : block_bases) {
        auto placed = place_blocks(base, row, xparts_of_u[row], yparts);
        blocks.insert(blocks.end(), placed.begin(), placed.end());
    }

    CertificateNode node;
    node.system = glue(u, w, xparts_of_u, yparts, blocks, std::move(prov));
    node.anchor_part = xparts_of_u.at(anchored_row);

    inner.child_map.assign(wmap.begin(), wmap.end());
    node.children.push_back(std::move(inner));

    CertificateNode filler;
    filler.role = NodeRole::filler;
    filler.system = u;
    node.children.push_back(std::move(filler));

    for (auto& b : blocks) {
        CertificateNode bn;
        bn.role = b.i == anchored_row ? NodeRole::anchored_block : NodeRole::block;
        bn.label = "block[" + std::to_string(b.i) + "," + std::to_string(b.j) + "]";
        bn.system = std::move(b.system);
        node.children.push_back(std::move(bn));
    }
    return node;
}

/// Labels of U, in the order consecutive_labels assigns them.
inline std::vector<Vertex> first_labels(std::size_t count, int offset = 0)
{
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(Vertex::residue(offset + static_cast<int>(k)));
    return out;
}

inline CertificateNode main1(int v, int t)
{
    if (v == 4 * t)
        return leaf(intersecting_cs_4t(t));
    auto inner = main1(v - 2 * t, t);
    const auto u = hamiltonian_cs(2 * t);
    const auto x = first_labels(static_cast<std::size_t>(2 * t));
    return glue_step({Construction::main1, {{"t", t}, {"v", v}}}, u, std::move(inner), {x},
                     static_cast<std::size_t>(2 * t), {{0, bipartite_intersecting_2t(t)}}, 0);
}

inline CertificateNode main2(int v, int t)
{
    if (v == 4 * t)
        return leaf(intersecting_cs_4t(t));
    auto inner = main2(v - 4 * t, t);
    const auto u = intersecting_cs_4t(t);
    const auto x = first_labels(static_cast<std::size_t>(4 * t));
    return glue_step({Construction::main2, {{"t", t}, {"v", v}}}, u, std::move(inner), {x},
                     static_cast<std::size_t>(4 * t), {{0, bipartite_intersecting_4t(t)}}, 0);
}

inline CertificateNode main3(int v, int t)
{
    if (v == 6 * t)
        return leaf(intersecting_cs_6t(t));
    auto inner = main2(v - 6 * t, t);
    const auto u = intersecting_cs_6t(t);
    const auto x1 = first_labels(static_cast<std::size_t>(4 * t));
    const auto x2 = first_labels(static_cast<std::size_t>(2 * t), 4 * t);
    return glue_step({Construction::main3, {{"t", t}, {"v", v}}}, u, std::move(inner), {x1, x2},
                     static_cast<std::size_t>(4 * t),
                     {{0, bipartite_intersecting_4t(t)}, {1, bipartite_generic_2t_4t(t)}}, 0);
}

} // namespace detail

/**
 * An unparalleled CS(v, 2t) with its certificate. t = 2 is a single dihedral system;
 * otherwise the system grows from a base intersecting system by glue steps.
 */
inline BuildResult build_unparalleled(int v, int t, const BuildOptions& opt = {})
{
    check_admissible(v, t);
    CertificateNode root;
    if (t == 2)
        root = detail::leaf(dihedral_four_cycle_system(v / 4));
    else if (t % 2 == 0 || t == 3 || t == 5)
        root = detail::main1(v, t);
    else if (v % (4 * t) == 0)
        root = detail::main2(v, t);
    else
        root = detail::main3(v, t);

    record_claims(root, opt.exhaustive_threshold, opt.budget);
    BuildResult out;
    out.system = root.system;
    out.certificate.root = std::move(root);
    out.certificate.exhaustive_threshold = opt.exhaustive_threshold;
    return out;
}

} // namespace evenweave

#endif

#ifndef EVENWEAVE_GLUE_HPP
#define EVENWEAVE_GLUE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/labeled.hpp"
#include "evenweave/verifier.hpp"

namespace evenweave
{

using VertexMap = std::map<Vertex, Vertex>;

/**
 * Applies f to every vertex. f must be defined and injective on sys.vertex_set
 * (extra keys are ignored). An anchor certificate survives without recheck
 * only when f fixes every anchor.
 */
inline LabeledSystem relabel(const LabeledSystem& sys, const VertexMap& f)
{
    auto image = [&f](const Vertex& v) {
        auto it = f.find(v);
        if (it == f.end())
            throw InvalidArgument("relabeling is not defined on " + to_string(v));
        return it->second;
    };
    std::set<Vertex> seen;
    for (const auto& v : sys.vertex_set)
        if (!seen.insert(image(v)).second)
            throw InvalidArgument("relabeling is not injective: two labels map to " + to_string(image(v)));

    LabeledSystem out;
    out.provenance = sys.provenance;
    out.notes = sys.notes;
    for (const auto& v : sys.vertex_set)
        out.vertex_set.push_back(image(v));

    auto map_all = [&](const std::vector<Vertex>& vs) {
        std::vector<Vertex> r;
        for (const auto& v : vs)
            r.push_back(image(v));
        return r;
    };
    if (const auto* k = std::get_if<CompleteMinusFactor>(&sys.system.host)) {
        CompleteMinusFactor h{map_all(k->vertices), std::nullopt};
        if (k->factor) {
            std::vector<Edge> fac;
            for (const auto& e : *k->factor)
                fac.push_back(Edge::make(image(e.u), image(e.v)));
            std::sort(fac.begin(), fac.end());
            h.factor = std::move(fac);
        }
        out.system.host = std::move(h);
    } else {
        const auto& b = std::get<CompleteBipartite>(sys.system.host);
        out.system.host = CompleteBipartite{map_all(b.part_x), map_all(b.part_y)};
    }
    for (const auto& c : sys.system.cycles) {
        std::vector<Vertex> vs;
        for (const auto& v : c.vertices())
            vs.push_back(image(v));
        out.system.cycles.emplace_back(std::move(vs));
    }
    std::sort(out.system.cycles.begin(), out.system.cycles.end());

    if (sys.anchors) {
        out.anchors = map_all(*sys.anchors);
        const bool trusted = sys.anchor_check == AnchorCheck::verified || sys.anchor_check == AnchorCheck::inherited;
        const bool fixed = std::all_of(sys.anchors->begin(), sys.anchors->end(),
                                       [&](const Vertex& a) { return image(a) == a; });
        if (trusted && fixed)
            out.anchor_check = AnchorCheck::inherited;
        else
            out.anchor_check = check_intersecting(out.system, out.anchors).passed ? AnchorCheck::verified
                                                                                  : AnchorCheck::failed;
    }
    return out;
}

/// Maps vertex_set[k] to the residue offset + k.
inline VertexMap consecutive_labels(const LabeledSystem& sys, int offset)
{
    VertexMap f;
    for (std::size_t k = 0; k < sys.vertex_set.size(); ++k)
        f.emplace(sys.vertex_set[k], Vertex::residue(offset + static_cast<int>(k)));
    return f;
}

/// Block (i, j) is a CS(K_{X_i, Y_j}, 2t).
struct GlueBlock
{
    std::size_t i = 0;
    std::size_t j = 0;
    LabeledSystem system;
};

/**
 * F = U + W + all blocks. Parts must partition the vertex sets of U and W, each of size
 * divisible by the cycle length; the 1-factor of F is the union of the factors of U and W.
 */
inline LabeledSystem glue(const LabeledSystem& u, const LabeledSystem& w, const std::vector<std::vector<Vertex>>& xparts,
                          const std::vector<std::vector<Vertex>>& yparts, const std::vector<GlueBlock>& blocks,
                          Provenance provenance)
{
    const std::size_t len = u.cycle_length();
    if (len == 0 || w.cycle_length() != len)
        throw InvalidArgument("U and W must be non-empty systems with one common cycle length");

    std::set<Vertex> uset(u.vertex_set.begin(), u.vertex_set.end());
    std::set<Vertex> wset(w.vertex_set.begin(), w.vertex_set.end());
    for (const auto& v : uset)
        if (wset.count(v))
            throw InvalidArgument("U and W share the label " + to_string(v));

    auto check_partition = [len](const std::vector<std::vector<Vertex>>& parts, const std::set<Vertex>& whole,
                                 const char* what) {
        std::set<Vertex> covered;
        for (const auto& p : parts) {
            if (p.empty() || p.size() % len != 0)
                throw InvalidArgument(std::string(what) + " part of size " + std::to_string(p.size())
                                      + " is not a positive multiple of " + std::to_string(len));
            for (const auto& v : p)
                if (!whole.count(v) || !covered.insert(v).second)
                    throw InvalidArgument(std::string(what) + " parts do not partition the vertex set at "
                                          + to_string(v));
        }
        if (covered.size() != whole.size())
            throw InvalidArgument(std::string(what) + " parts do not cover the vertex set");
    };
    check_partition(xparts, uset, "X");
    check_partition(yparts, wset, "Y");

    std::set<std::pair<std::size_t, std::size_t>> placed;
    for (const auto& b : blocks) {
        if (b.i >= xparts.size() || b.j >= yparts.size())
            throw InvalidArgument("block index out of range");
        if (!placed.insert({b.i, b.j}).second)
            throw InvalidArgument("two blocks for the same pair of parts");
        const auto* host = std::get_if<CompleteBipartite>(&b.system.system.host);
        if (!host)
            throw InvalidArgument("block " + b.system.provenance.tag() + " is not a bipartite system");
        const std::set<Vertex> bx(host->part_x.begin(), host->part_x.end());
        const std::set<Vertex> by(host->part_y.begin(), host->part_y.end());
        if (bx != std::set<Vertex>(xparts[b.i].begin(), xparts[b.i].end())
            || by != std::set<Vertex>(yparts[b.j].begin(), yparts[b.j].end()))
            throw InvalidArgument("block (" + std::to_string(b.i) + "," + std::to_string(b.j)
                                  + ") does not live on K_{X_i,Y_j}");
        if (b.system.cycle_length() != len)
            throw InvalidArgument("block cycle length differs from U");
    }

    LabeledSystem out;
    out.provenance = std::move(provenance);
    out.vertex_set = u.vertex_set;
    out.vertex_set.insert(out.vertex_set.end(), w.vertex_set.begin(), w.vertex_set.end());

    CompleteMinusFactor host{out.vertex_set, std::nullopt};
    const auto* uf = std::get_if<CompleteMinusFactor>(&u.system.host);
    const auto* wf = std::get_if<CompleteMinusFactor>(&w.system.host);
    if (!uf || !wf)
        throw InvalidArgument("U and W must be systems of K_v - I");
    if (uf->factor && wf->factor) {
        std::vector<Edge> fac = *uf->factor;
        fac.insert(fac.end(), wf->factor->begin(), wf->factor->end());
        std::sort(fac.begin(), fac.end());
        host.factor = std::move(fac);
    }
    out.system.host = std::move(host);

    auto& cs = out.system.cycles;
    cs = u.system.cycles;
    cs.insert(cs.end(), w.system.cycles.begin(), w.system.cycles.end());
    for (const auto& b : blocks)
        cs.insert(cs.end(), b.system.system.cycles.begin(), b.system.system.cycles.end());
    std::sort(cs.begin(), cs.end());

    auto add_notes = [&out](const LabeledSystem& s) {
        for (const auto& n : s.notes)
            if (std::find(out.notes.begin(), out.notes.end(), n) == out.notes.end())
                out.notes.push_back(n);
    };
    add_notes(u);
    add_notes(w);
    for (const auto& b : blocks)
        add_notes(b.system);
    return out;
}

} // namespace evenweave

#endif

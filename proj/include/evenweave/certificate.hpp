#ifndef EVENWEAVE_CERTIFICATE_HPP
#define EVENWEAVE_CERTIFICATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "evenweave/constructions.hpp"
#include "evenweave/cycle.hpp"
#include "evenweave/labeled.hpp"
#include "evenweave/verifier.hpp"

namespace evenweave
{

enum class NodeRole {
    system,          // a CS(v, 2t) of K_v - I: root, or the inner system W of a glue step
    filler,          // the system U of a glue step, in the parent's labels
    anchored_block,  // a block on K_{X,Y_j} whose cycles pairwise meet in X
    block,           // any other block
};

inline std::string to_string(NodeRole r)
{
    switch (r) {
    case NodeRole::system:
        return "system";
    case NodeRole::filler:
        return "filler";
    case NodeRole::anchored_block:
        return "anchored-block";
    case NodeRole::block:
        return "block";
    }
    return "?";
}

/// One node of the recursion tree. `claims` are the conditions checked when the node was built.
struct CertificateNode
{
    std::string label;  // e.g. "block[0,2]"; empty for system nodes
    NodeRole role = NodeRole::system;
    LabeledSystem system;
    std::map<std::string, bool> claims;
    std::vector<Vertex> anchor_part;  // glue nodes: the set X
    std::vector<std::pair<Vertex, Vertex>> child_map;  // system children of glue nodes: own label -> parent label
    std::vector<CertificateNode> children;  // glue nodes: W first, then U, then the blocks

    std::string name() const { return label.empty() ? system.provenance.tag() : label + " " + system.provenance.tag(); }
    bool is_glue() const
    {
        const auto k = system.provenance.kind;
        return role == NodeRole::system && (k == Construction::main1 || k == Construction::main2 || k == Construction::main3)
            && !children.empty();
    }
};

struct Certificate
{
    CertificateNode root;
    std::size_t exhaustive_threshold = 24;
};

struct CertificateFailure
{
    std::string node;  // path of node names from the root
    std::string claim;
    std::string detail;
};

struct CertificateReport
{
    bool passed = false;
    std::vector<CertificateFailure> failures;
    std::size_t nodes_checked = 0;
    std::vector<std::string> tree;  // one line per node, indented by depth
};

struct CheckOptions
{
    std::optional<std::size_t> exhaustive_threshold;  // defaults to the certificate's
    SearchBudget budget{};
};

/**
 * Every cycle avoiding oo and oo' has its part in lambda<x> equal to lambda times its part in <x>;
 * every other cycle contains both oo and oo' and breaks that equality. No parallel class can then
 * exist, since its cycles split both cosets of <x>.
 */
inline bool mirror_condition(const CycleSystem& sys, const GroupSpec& g)
{
    if (!g.is_dihedral())
        return false;
    const auto lambda = g.element(0, 1);
    for (const auto& c : sys.cycles) {
        std::set<GroupElement> rot;
        std::set<GroupElement> refl;
        bool inf = false;
        bool inf_prime = false;
        for (const auto& v : c.vertices()) {
            if (v == Vertex::infty()) {
                inf = true;
                continue;
            }
            if (v == Vertex::infty_prime()) {
                inf_prime = true;
                continue;
            }
            if (v.kind != VertexKind::dihedral || v.a < 0 || v.a >= g.rotation_order())
                return false;
            const auto el = as_element(v, g);
            (el.e == 0 ? rot : refl).insert(el);
        }
        std::set<GroupElement> mirrored;
        for (const auto& r : rot)
            mirrored.insert(compose(lambda, r));
        if (!inf && !inf_prime) {
            if (mirrored != refl)
                return false;
        } else if (!(inf && inf_prime) || mirrored == refl) {
            return false;
        }
    }
    return true;
}

namespace detail
{

inline std::optional<LabeledSystem> rebuild_base(const Provenance& p)
{
    try {
        switch (p.kind) {
        case Construction::four:
            return dihedral_four_cycle_system(p.param("s").value_or(0));
        case Construction::int1:
            return intersecting_cs_4t(p.param("t").value_or(0));
        case Construction::int2:
            return intersecting_cs_6t(p.param("t").value_or(0));
        default:
            return std::nullopt;
        }
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline std::vector<Cycle> sorted_cycles(std::vector<Cycle> cs)
{
    std::sort(cs.begin(), cs.end());
    return cs;
}

class CertificateChecker
{
public:
    CertificateChecker(std::size_t threshold, SearchBudget budget) : threshold_(threshold), budget_(budget) {}

    struct Outcome
    {
        std::map<std::string, bool> claims;
        bool unparalleled = false;
    };

    /// Recomputes the claims of `node` and all descendants, recording failures.
    Outcome evaluate(const CertificateNode& node, const std::string& path, std::size_t depth)
    {
        ++nodes_;
        const std::string here = path.empty() ? node.name() : path + " / " + node.name();
        const std::size_t slot = lines_.size();
        lines_.emplace_back();
        Outcome out;
        auto& cl = out.claims;
        const auto& sys = node.system.system;

        const auto dec = check_decomposition(sys);
        cl["decomposition"] = dec.passed;
        if (!dec.passed)
            fail(here, "decomposition", describe(dec));

        switch (node.role) {
        case NodeRole::system:
            if (node.is_glue())
                evaluate_glue(node, here, depth, out);
            else
                evaluate_leaf(node, here, out);
            break;
        case NodeRole::filler: {
            cl["intersecting"] = check_intersecting(sys).passed && sys.cycles.size() >= 1;
            if (!cl["intersecting"])
                fail(here, "intersecting", "two cycles of the filler system are disjoint");
            break;
        }
        case NodeRole::anchored_block: {
            const bool ok = node.system.anchors && check_intersecting(sys, node.system.anchors).passed;
            cl["intersecting"] = ok;
            if (!ok)
                fail(here, "intersecting", "two block cycles share no anchor vertex");
            break;
        }
        case NodeRole::block:
            break;
        }

        for (const auto& [name, recorded] : node.claims) {
            auto it = cl.find(name);
            if (recorded && it != cl.end() && !it->second)
                fail(here, name, "recorded as holding but does not hold on recheck");
        }

        std::string line(depth * 2, ' ');
        line += node.name() + " [" + to_string(node.role) + "]";
        for (const auto& [name, value] : cl)
            line += " " + name + "=" + (value ? "ok" : "FAIL");
        lines_[slot] = std::move(line);
        if (sink)
            (*sink)[&node] = cl;
        return out;
    }

    std::vector<CertificateFailure> failures;
    std::map<const CertificateNode*, std::map<std::string, bool>>* sink = nullptr;
    std::size_t nodes() const { return nodes_; }
    std::vector<std::string> take_lines() { return std::move(lines_); }

private:
    static std::string describe(const DecompositionReport& r)
    {
        std::string s;
        if (!r.malformed.empty())
            s += r.malformed.front() + "; ";
        s += std::to_string(r.duplicated.size()) + " duplicated, " + std::to_string(r.uncovered.size())
           + " uncovered, " + std::to_string(r.foreign.size()) + " foreign edges";
        return s;
    }

    void fail(const std::string& node, const std::string& claim, const std::string& detail)
    {
        failures.push_back({node, claim, detail});
    }

    std::optional<bool> exhaustive(const CycleSystem& sys, const std::string& here)
    {
        if (host_order(sys.host) > threshold_)
            return std::nullopt;
        const auto r = find_parallel_class(sys, budget_);
        if (r.status == ParallelClassStatus::found)
            fail(here, "exhaustive", "a parallel class exists");
        if (r.status == ParallelClassStatus::budget_exceeded)
            return std::nullopt;
        return r.status == ParallelClassStatus::none_exhaustive;
    }

    void evaluate_leaf(const CertificateNode& node, const std::string& here, Outcome& out)
    {
        auto& cl = out.claims;
        const auto& sys = node.system.system;
        const auto base = rebuild_base(node.system.provenance);
        cl["base-construction"] = base && base->system.host == sys.host
                               && sorted_cycles(base->system.cycles) == sorted_cycles(sys.cycles);
        if (!cl["base-construction"])
            fail(here, "base-construction", "system differs from the construction named by its tag");

        bool route = false;
        const auto kind = node.system.provenance.kind;
        if (kind == Construction::four) {
            const int s = node.system.provenance.param("s").value_or(0);
            cl["mirror"] = s >= 2 && mirror_condition(sys, GroupSpec::dihedral(s));
            route = cl["mirror"];
        } else {
            const std::size_t len = sys.cycles.empty() ? 0 : sys.cycles.front().length();
            cl["intersecting"] = check_intersecting(sys).passed && len < host_order(sys.host);
            route = cl["intersecting"];
        }
        if (auto ex = exhaustive(sys, here)) {
            cl["exhaustive"] = *ex;
            route = route || *ex;
        }
        out.unparalleled = cl["decomposition"] && route;
        cl["unparalleled"] = out.unparalleled;
        if (!out.unparalleled)
            fail(here, "unparalleled", "no sufficient condition holds");
    }

    void evaluate_glue(const CertificateNode& node, const std::string& here, std::size_t depth, Outcome& out)
    {
        auto& cl = out.claims;
        const auto& sys = node.system.system;
        const CertificateNode* inner = nullptr;
        const CertificateNode* filler = nullptr;
        std::vector<const CertificateNode*> anchored;
        std::vector<const CertificateNode*> others;
        for (const auto& ch : node.children) {
            switch (ch.role) {
            case NodeRole::system:
                inner = inner ? inner : &ch;
                break;
            case NodeRole::filler:
                filler = filler ? filler : &ch;
                break;
            case NodeRole::anchored_block:
                anchored.push_back(&ch);
                break;
            case NodeRole::block:
                others.push_back(&ch);
                break;
            }
        }

        bool inner_unparalleled = false;
        std::map<std::string, bool> filler_claims;
        for (const auto& ch : node.children) {
            const auto o = evaluate(ch, here, depth + 1);
            if (&ch == inner)
                inner_unparalleled = o.unparalleled;
            if (&ch == filler)
                filler_claims = o.claims;
        }
        if (!inner || !filler) {
            cl["composition"] = false;
            fail(here, "composition", "glue node lacks its inner system or its filler");
            cl["unparalleled"] = false;
            fail(here, "unparalleled", "no sufficient condition holds");
            return;
        }

        // F = U + f(W) + blocks, on the label set U + f(W)
        std::map<Vertex, Vertex> f(inner->child_map.begin(), inner->child_map.end());
        bool composed = f.size() == inner->child_map.size();
        std::vector<Cycle> parts = filler->system.system.cycles;
        std::vector<Vertex> labels = filler->system.vertex_set;
        for (const auto& v : inner->system.vertex_set) {
            auto it = f.find(v);
            if (it == f.end()) {
                composed = false;
                break;
            }
            labels.push_back(it->second);
        }
        if (composed) {
            try {
                for (const auto& c : inner->system.system.cycles) {
                    std::vector<Vertex> vs;
                    for (const auto& v : c.vertices())
                        vs.push_back(f.at(v));
                    parts.emplace_back(std::move(vs));
                }
            } catch (const std::exception&) {
                composed = false;
            }
        }
        for (const auto* b : anchored)
            parts.insert(parts.end(), b->system.system.cycles.begin(), b->system.system.cycles.end());
        for (const auto* b : others)
            parts.insert(parts.end(), b->system.system.cycles.begin(), b->system.system.cycles.end());
        composed = composed && sorted_cycles(parts) == sorted_cycles(sys.cycles)
                && std::set<Vertex>(labels.begin(), labels.end())
                       == std::set<Vertex>(node.system.vertex_set.begin(), node.system.vertex_set.end())
                && labels.size() == node.system.vertex_set.size();
        cl["composition"] = composed;
        if (!composed)
            fail(here, "composition", "cycles are not U + f(W) + blocks");

        // every two cycles of the anchored blocks meet in X, and each block is anchored on X
        const std::set<Vertex> xset(node.anchor_part.begin(), node.anchor_part.end());
        std::vector<Cycle> block_cycles;
        bool anchors_ok = !xset.empty();
        for (const auto* b : anchored) {
            block_cycles.insert(block_cycles.end(), b->system.system.cycles.begin(), b->system.system.cycles.end());
            anchors_ok = anchors_ok && b->system.anchors
                      && std::set<Vertex>(b->system.anchors->begin(), b->system.anchors->end()) == xset;
        }
        cl["blocks-intersecting"] = anchors_ok && check_intersecting(block_cycles, node.anchor_part).passed;
        if (!cl["blocks-intersecting"])
            fail(here, "blocks-intersecting", "anchored block cycles do not pairwise meet in X");

        const bool filler_ok = filler_claims.count("intersecting") && filler_claims["intersecting"];
        cl["cover-argument"] = composed && filler_ok && cl["blocks-intersecting"]
                            && cover_argument(node, *filler, anchored, inner_unparalleled, here);

        bool route = cl["cover-argument"];
        if (auto ex = exhaustive(sys, here)) {
            cl["exhaustive"] = *ex;
            route = route || *ex;
        }
        out.unparalleled = cl["decomposition"] && cl["composition"] && route;
        cl["unparalleled"] = out.unparalleled;
        if (!out.unparalleled)
            fail(here, "unparalleled", "no sufficient condition holds");
    }

    /**
     * A parallel class P of F contains at most one cycle of U (pairwise intersecting) and at
     * most one anchored block cycle (pairwise meeting in X), and only those cycles touch X.
     * Every way of covering X with such cycles must be a single Hamiltonian cycle of U, after
     * which P minus that cycle is a parallel class of f(W), which W excludes.
     */
    bool cover_argument(const CertificateNode& node, const CertificateNode& filler,
                        const std::vector<const CertificateNode*>& anchored, bool inner_unparalleled,
                        const std::string& here)
    {
        const auto& x = node.anchor_part;
        const std::set<Vertex> xset(x.begin(), x.end());
        const std::set<Vertex> uset(filler.system.vertex_set.begin(), filler.system.vertex_set.end());
        auto x_count = [&xset](const Cycle& c) {
            return static_cast<std::size_t>(
                std::count_if(c.vertices().begin(), c.vertices().end(), [&](const Vertex& v) { return xset.count(v) > 0; }));
        };

        std::multiset<Cycle> allowed(filler.system.system.cycles.begin(), filler.system.system.cycles.end());
        std::vector<const Cycle*> bcs;
        for (const auto* b : anchored)
            for (const auto& c : b->system.system.cycles) {
                allowed.insert(c);
                bcs.push_back(&c);
            }
        for (const auto& c : node.system.system.cycles) {
            if (x_count(c) == 0)
                continue;
            auto it = allowed.find(c);
            if (it == allowed.end()) {
                fail(here, "cover-argument", "cycle " + c.str() + " touches X but is neither in U nor an anchored block");
                return false;
            }
            allowed.erase(it);
        }
        // cycles outside U must all come from f(W) or touch U: blocks live on X_i x Y_j with X_i inside U
        for (const auto& ch : node.children) {
            if (ch.role != NodeRole::anchored_block && ch.role != NodeRole::block)
                continue;
            for (const auto& c : ch.system.system.cycles)
                if (std::none_of(c.vertices().begin(), c.vertices().end(), [&](const Vertex& v) { return uset.count(v) > 0; })) {
                    fail(here, "cover-argument", "block cycle " + c.str() + " avoids U");
                    return false;
                }
        }

        auto disjoint = [](const Cycle& a, const Cycle& b) {
            for (const auto& v : a.vertices())
                if (b.contains(v))
                    return false;
            return true;
        };
        auto escape = [&](const std::string& why) {
            fail(here, "cover-argument", why);
            return false;
        };
        const std::size_t need = xset.size();
        for (const auto& u : filler.system.system.cycles) {
            if (x_count(u) == need) {
                const std::set<Vertex> vu(u.vertices().begin(), u.vertices().end());
                if (vu != uset)
                    return escape("cycle " + u.str() + " of U covers X without covering U");
                if (!inner_unparalleled)
                    return escape("a Hamiltonian cycle of U covers X and W is not shown unparalleled");
            }
        }
        for (const auto* b : bcs)
            if (x_count(*b) == need)
                return escape("block cycle " + b->str() + " covers X alone");
        for (const auto& u : filler.system.system.cycles) {
            const std::size_t xu = x_count(u);
            if (xu == need)
                continue;
            for (const auto* b : bcs)
                if (xu + x_count(*b) >= need && disjoint(u, *b))
                    return escape("cycles " + u.str() + " and " + b->str() + " cover X together");
        }
        return true;
    }

    std::size_t threshold_;
    SearchBudget budget_;
    std::size_t nodes_ = 0;
    std::vector<std::string> lines_;
};

} // namespace detail

/// Recomputes every claim of every node; `sys` must be the certified system itself.
inline CertificateReport check_certificate(const Certificate& cert, const LabeledSystem& sys,
                                           const CheckOptions& opt = {})
{
    CertificateReport report;
    detail::CertificateChecker checker(opt.exhaustive_threshold.value_or(cert.exhaustive_threshold), opt.budget);
    const auto root = checker.evaluate(cert.root, "", 0);
    report.failures = std::move(checker.failures);
    report.nodes_checked = checker.nodes();
    report.tree = checker.take_lines();

    const auto& rs = cert.root.system;
    if (detail::sorted_cycles(rs.system.cycles) != detail::sorted_cycles(sys.system.cycles)
        || std::set<Vertex>(rs.vertex_set.begin(), rs.vertex_set.end())
               != std::set<Vertex>(sys.vertex_set.begin(), sys.vertex_set.end()))
        report.failures.push_back({cert.root.name(), "subject", "certificate is about a different system"});
    if (!root.unparalleled && std::none_of(report.failures.begin(), report.failures.end(), [](const auto& f) {
            return f.claim == "unparalleled";
        }))
        report.failures.push_back({cert.root.name(), "unparalleled", "root is not shown unparalleled"});
    report.passed = report.failures.empty();
    return report;
}

namespace detail
{

inline void store_claims(CertificateNode& node, std::map<const CertificateNode*, std::map<std::string, bool>>& found)
{
    node.claims = found[&node];
    for (auto& ch : node.children)
        store_claims(ch, found);
}

} // namespace detail

/// Computes the claims of every node in the tree and stores them in place.
inline void record_claims(CertificateNode& root, std::size_t threshold, const SearchBudget& budget = {})
{
    std::map<const CertificateNode*, std::map<std::string, bool>> found;
    detail::CertificateChecker checker(threshold, budget);
    checker.sink = &found;
    checker.evaluate(root, "", 0);
    detail::store_claims(root, found);
}

} // namespace evenweave

#endif

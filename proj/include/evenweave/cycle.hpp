#ifndef EVENWEAVE_CYCLE_HPP
#define EVENWEAVE_CYCLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evenweave/error.hpp"
#include "evenweave/group.hpp"
#include "evenweave/vertex.hpp"

namespace evenweave
{

namespace detail
{

inline std::string join(std::span<const Vertex> vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(vs[i]);
    }
    return out;
}

inline void require_distinct(std::span<const Vertex> vs, const char* what)
{
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument(std::string(what) + " has a repeated vertex: (" + join(vs) + ")");
}

} // namespace detail

/**
 * A cycle of length >= 3 on distinct vertices, kept in canonical form: the
 * lexicographically least sequence over all rotations of both directions.
 * Bipartite cycles consist only of bi() vertices whose sides alternate.
 */
class Cycle
{
public:
    explicit Cycle(std::vector<Vertex> vertices) : vs_(std::move(vertices))
    {
        if (vs_.size() < 3)
            throw InvalidArgument("a cycle needs at least 3 vertices: (" + detail::join(vs_) + ")");
        detail::require_distinct(vs_, "cycle");
        const auto bip = std::count_if(vs_.begin(), vs_.end(), [](const Vertex& v) { return v.is_bipartite(); });
        if (bip != 0) {
            if (static_cast<std::size_t>(bip) != vs_.size())
                throw InvalidArgument("cycle mixes bipartite and non-bipartite vertices: (" + detail::join(vs_) + ")");
            for (std::size_t i = 0; i < vs_.size(); ++i)
                if (vs_[i].side() == vs_[(i + 1) % vs_.size()].side())
                    throw InvalidArgument("bipartite cycle has two adjacent vertices on one side: ("
                                          + detail::join(vs_) + ")");
        }
        canonicalize();
    }

    std::span<const Vertex> vertices() const { return vs_; }
    std::size_t length() const { return vs_.size(); }
    const Vertex& operator[](std::size_t i) const { return vs_[i]; }

    bool contains(const Vertex& v) const { return std::find(vs_.begin(), vs_.end(), v) != vs_.end(); }
    bool is_bipartite() const { return vs_.front().is_bipartite(); }

    /// Edges in cycle order, (v_i, v_{i+1}) with wrap-around.
    std::vector<std::pair<Vertex, Vertex>> edges() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(vs_.size());
        for (std::size_t i = 0; i < vs_.size(); ++i)
            out.emplace_back(vs_[i], vs_[(i + 1) % vs_.size()]);
        return out;
    }

    std::string str() const { return "(" + detail::join(vs_) + ")"; }

    auto operator<=>(const Cycle&) const = default;

private:
    void canonicalize()
    {
        const std::size_t n = vs_.size();
        std::vector<Vertex> best = vs_;
        std::vector<Vertex> cand(n);
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t i = 0; i < n; ++i)
                    cand[i] = dir == 0 ? vs_[(r + i) % n] : vs_[(r + n - i) % n];
                if (cand < best)
                    best = cand;
            }
        }
        vs_ = std::move(best);
    }

    std::vector<Vertex> vs_;
};

/// A path on t >= 1 distinct vertices, kept in the given order.
class Path
{
public:
    explicit Path(std::vector<Vertex> vertices) : vs_(std::move(vertices))
    {
        if (vs_.empty())
            throw InvalidArgument("a path needs at least one vertex");
        detail::require_distinct(vs_, "path");
    }

    std::span<const Vertex> vertices() const { return vs_; }
    std::size_t size() const { return vs_.size(); }
    const Vertex& operator[](std::size_t i) const { return vs_[i]; }

    auto operator<=>(const Path&) const = default;

private:
    std::vector<Vertex> vs_;
};

/// Multiset over group elements with explicit multiplicities.
class DiffMultiset
{
public:
    void add(const GroupElement& g, int times = 1)
    {
        if (times > 0)
            counts_[g] += times;
    }

    int count(const GroupElement& g) const
    {
        auto it = counts_.find(g);
        return it == counts_.end() ? 0 : it->second;
    }

    std::size_t total() const
    {
        std::size_t n = 0;
        for (const auto& [g, c] : counts_)
            n += static_cast<std::size_t>(c);
        return n;
    }

    std::size_t distinct() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }

    std::set<GroupElement> support() const
    {
        std::set<GroupElement> out;
        for (const auto& [g, c] : counts_)
            out.insert(g);
        return out;
    }

    /// True iff every element appears exactly once.
    bool is_set() const
    {
        return std::all_of(counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second == 1; });
    }

    const std::map<GroupElement, int>& counts() const { return counts_; }

    DiffMultiset& operator+=(const DiffMultiset& other)
    {
        for (const auto& [g, c] : other.counts_)
            counts_[g] += c;
        return *this;
    }

    bool operator==(const DiffMultiset&) const = default;

private:
    std::map<GroupElement, int> counts_;
};

namespace detail
{

template <class Seq>
DiffMultiset delta_of(const Seq& vs, std::size_t edge_count, const GroupSpec& g)
{
    DiffMultiset out;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < edge_count; ++i) {
        const Vertex& p = vs[i];
        const Vertex& q = vs[(i + 1) % n];
        if (p.is_bipartite() || q.is_bipartite())
            throw InvalidArgument("list of differences is undefined on bipartite vertices; use oriented_delta");
        if (p.is_infinite() || q.is_infinite())
            continue;
        const auto a = as_element(p, g);
        const auto b = as_element(q, g);
        out.add(quotient(a, b));
        out.add(quotient(b, a));
    }
    return out;
}

} // namespace detail

/// +/- differences (right quotients) over adjacent pairs; edges at oo/oo' contribute nothing.
inline DiffMultiset delta(const Cycle& c, const GroupSpec& g)
{
    return detail::delta_of(c.vertices(), c.length(), g);
}

inline DiffMultiset delta(const Path& p, const GroupSpec& g)
{
    return detail::delta_of(p.vertices(), p.size() - 1, g);
}

/// Oriented differences g - h over the edges {(g,1), (h,0)} of a cycle of K_{w,w}.
inline DiffMultiset oriented_delta(const Cycle& c, int w)
{
    if (!c.is_bipartite())
        throw InvalidArgument("oriented differences need a bipartite cycle, got " + c.str());
    const auto zw = GroupSpec::cyclic(w);
    DiffMultiset out;
    for (const auto& [p, q] : c.edges()) {
        if (p.a < 0 || p.a >= w || q.a < 0 || q.a >= w)
            throw InvalidArgument("bipartite vertex outside Z_" + std::to_string(w) + " in " + c.str());
        const Vertex& top = p.side() == 1 ? p : q;
        const Vertex& bottom = p.side() == 1 ? q : p;
        out.add(zw.element(static_cast<long long>(top.a) - bottom.a));
    }
    return out;
}

inline Vertex translate(const Vertex& v, const GroupElement& g)
{
    if (v.is_infinite())
        return v;
    if (v.is_bipartite()) {
        if (!g.group.is_cyclic())
            throw InvalidArgument("bipartite vertices translate only under a cyclic group");
        const int w = g.group.order();
        if (v.a < 0 || v.a >= w)
            throw InvalidArgument("bipartite vertex " + to_string(v) + " outside Z_" + std::to_string(w));
        return Vertex::bi(mod(static_cast<long long>(v.a) + g.j, w), v.side());
    }
    return Vertex::of(compose(as_element(v, g.group), g));
}

/// C + g: right translation of every finite vertex; oo and oo' are fixed.
inline Cycle translate(const Cycle& c, const GroupElement& g)
{
    std::vector<Vertex> out;
    out.reserve(c.length());
    for (const auto& v : c.vertices())
        out.push_back(translate(v, g));
    return Cycle(std::move(out));
}

struct OrbitInfo
{
    std::vector<Cycle> cycles;  // sorted, distinct translates
    std::size_t stabilizer = 1;

    std::size_t size() const { return cycles.size(); }
    bool is_short() const { return stabilizer > 1; }
};

inline OrbitInfo orbit(const Cycle& c, const GroupSpec& g)
{
    OrbitInfo info;
    std::size_t fixed = 0;
    for (const auto& a : g.elements()) {
        Cycle moved = translate(c, a);
        if (moved == c)
            ++fixed;
        info.cycles.push_back(std::move(moved));
    }
    std::sort(info.cycles.begin(), info.cycles.end());
    info.cycles.erase(std::unique(info.cycles.begin(), info.cycles.end()), info.cycles.end());
    info.stabilizer = fixed;
    return info;
}

} // namespace evenweave

#endif

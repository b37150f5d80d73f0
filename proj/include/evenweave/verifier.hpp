#ifndef EVENWEAVE_VERIFIER_HPP
#define EVENWEAVE_VERIFIER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/exact_cover.hpp"
#include "evenweave/system.hpp"

namespace evenweave
{

namespace detail
{

/// Sorted vertex table for dense indexing.
class VertexIndex
{
public:
    explicit VertexIndex(std::vector<Vertex> vs) : vs_(std::move(vs))
    {
        std::sort(vs_.begin(), vs_.end());
        has_duplicates_ = std::adjacent_find(vs_.begin(), vs_.end()) != vs_.end();
        vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
    }

    std::optional<std::size_t> find(const Vertex& v) const
    {
        auto it = std::lower_bound(vs_.begin(), vs_.end(), v);
        if (it == vs_.end() || *it != v)
            return std::nullopt;
        return static_cast<std::size_t>(it - vs_.begin());
    }

    std::size_t size() const { return vs_.size(); }
    const Vertex& operator[](std::size_t i) const { return vs_[i]; }
    bool has_duplicates() const { return has_duplicates_; }

private:
    std::vector<Vertex> vs_;
    bool has_duplicates_ = false;
};

} // namespace detail

struct EdgeCount
{
    Edge edge;
    int count;

    bool operator==(const EdgeCount&) const = default;
};

struct DecompositionReport
{
    bool passed = false;
    std::vector<std::string> malformed;
    std::vector<EdgeCount> duplicated;
    std::vector<Edge> uncovered;
    std::vector<Edge> foreign;
    /// The 1-factor I (explicit, or recovered from the uncovered edges) for K_v - I hosts.
    std::optional<std::vector<Edge>> factor;
};

/**
 * Checks that the cycles partition the edge set of the host graph: every host
 * edge is covered exactly once and nothing else is covered. For K_v - I
 * without an explicit I, the uncovered edges must form a perfect matching,
 * which is returned as the recovered factor.
 */
inline DecompositionReport check_decomposition(const CycleSystem& sys)
{
    DecompositionReport r;
    const auto host_vs = host_vertices(sys.host);
    const detail::VertexIndex index(host_vs);
    const std::size_t n = index.size();
    if (index.has_duplicates())
        r.malformed.push_back("host vertex list has repeated labels");

    std::vector<int> side(n, -1);  // bipartite part membership
    const auto* bip = std::get_if<CompleteBipartite>(&sys.host);
    if (bip) {
        for (const auto& v : bip->part_x)
            side[*index.find(v)] = 0;
        for (const auto& v : bip->part_y) {
            auto& s = side[*index.find(v)];
            if (s == 0)
                r.malformed.push_back("vertex " + to_string(v) + " lies in both parts");
            s = 1;
        }
    }

    std::set<std::size_t> lengths;
    std::vector<int> cover(n * n, 0);
    std::vector<std::pair<Edge, int>> foreign_counts;
    for (const auto& c : sys.cycles) {
        lengths.insert(c.length());
        for (const auto& [p, q] : c.edges()) {
            const auto i = index.find(p);
            const auto j = index.find(q);
            if (!i || !j) {
                r.foreign.push_back(Edge::make(p, q));
                continue;
            }
            const auto lo = std::min(*i, *j);
            const auto hi = std::max(*i, *j);
            ++cover[lo * n + hi];
        }
    }
    if (lengths.size() > 1)
        r.malformed.push_back("cycles of more than one length");

    std::vector<char> in_factor(n * n, 0);
    const auto* kvi = std::get_if<CompleteMinusFactor>(&sys.host);
    if (kvi && kvi->factor) {
        std::vector<int> deg(n, 0);
        for (const auto& e : *kvi->factor) {
            const auto i = index.find(e.u);
            const auto j = index.find(e.v);
            if (!i || !j || *i == *j) {
                r.malformed.push_back("factor edge " + to_string(e) + " is not an edge of the host");
                continue;
            }
            ++deg[*i];
            ++deg[*j];
            in_factor[std::min(*i, *j) * n + std::max(*i, *j)] = 1;
        }
        if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 1; }))
            r.malformed.push_back("declared factor is not a perfect matching");
    }

    std::vector<Edge> missing;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const int cnt = cover[i * n + k];
            const Edge e = Edge::make(index[i], index[k]);
            const bool host_edge = bip ? side[i] != side[k] : !in_factor[i * n + k];
            if (!host_edge) {
                if (cnt > 0)
                    r.foreign.push_back(e);
                continue;
            }
            if (cnt == 0)
                missing.push_back(e);
            else if (cnt > 1)
                r.duplicated.push_back({e, cnt});
        }
    }
    std::sort(r.foreign.begin(), r.foreign.end());

    if (kvi && !kvi->factor) {
        std::vector<int> deg(n, 0);
        for (const auto& e : missing) {
            ++deg[*index.find(e.u)];
            ++deg[*index.find(e.v)];
        }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; }))
            r.factor = std::move(missing);
        else
            r.uncovered = std::move(missing);
    } else {
        r.uncovered = std::move(missing);
        if (kvi)
            r.factor = kvi->factor;
    }
    if (kvi && n % 2 != 0)
        r.malformed.push_back("K_v - I needs an even number of vertices");

    r.passed = r.malformed.empty() && r.duplicated.empty() && r.uncovered.empty() && r.foreign.empty();
    return r;
}

enum class ParallelClassStatus { found, none_exhaustive, budget_exceeded };

inline std::string to_string(ParallelClassStatus s)
{
    switch (s) {
    case ParallelClassStatus::found:
        return "Found";
    case ParallelClassStatus::none_exhaustive:
        return "NoneExhaustive";
    case ParallelClassStatus::budget_exceeded:
        return "BudgetExceeded";
    }
    return "?";
}

struct ParallelClassResult
{
    ParallelClassStatus status = ParallelClassStatus::none_exhaustive;
    std::vector<std::size_t> cycle_indices;  // into sys.cycles, when found
    std::vector<Cycle> parallel_class;
    std::uint64_t nodes = 0;
};

/**
 * Exact-cover search for a set of vertex-disjoint cycles covering every host
 * vertex. `none_exhaustive` is returned only after the complete search space
 * has been refuted.
 */
inline ParallelClassResult find_parallel_class(const CycleSystem& sys, const SearchBudget& budget = {})
{
    ParallelClassResult out;
    const auto host_vs = host_vertices(sys.host);
    const detail::VertexIndex index(host_vs);
    const std::size_t n = index.size();

    std::set<std::size_t> lengths;
    for (const auto& c : sys.cycles)
        lengths.insert(c.length());
    if (lengths.size() == 1 && n % *lengths.begin() != 0)
        return out;

    ExactCover ec(n);
    std::vector<std::size_t> row_to_cycle;
    std::vector<std::size_t> cols;
    for (std::size_t ci = 0; ci < sys.cycles.size(); ++ci) {
        cols.clear();
        bool inside = true;
        for (const auto& v : sys.cycles[ci].vertices()) {
            const auto i = index.find(v);
            if (!i) {
                inside = false;
                break;
            }
            cols.push_back(*i);
        }
        if (!inside)
            continue;
        ec.add_row(cols);
        row_to_cycle.push_back(ci);
    }

    const auto res = ec.solve(budget);
    out.nodes = res.nodes;
    if (res.status == SearchStatus::exhausted)
        return out;
    if (res.status == SearchStatus::budget_exceeded) {
        out.status = ParallelClassStatus::budget_exceeded;
        return out;
    }
    out.status = ParallelClassStatus::found;
    std::vector<int> seen(n, 0);
    for (auto row : res.rows) {
        const std::size_t ci = row_to_cycle[row];
        out.cycle_indices.push_back(ci);
        out.parallel_class.push_back(sys.cycles[ci]);
        for (const auto& v : sys.cycles[ci].vertices())
            ++seen[*index.find(v)];
    }
    if (!std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }))
        throw std::logic_error("exact cover returned a set that is not a parallel class");
    return out;
}

struct IntersectionReport
{
    bool passed = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // disjoint pair of cycle indices
    std::size_t pairs_checked = 0;
};

/// Every two cycles share a vertex (restricted to `anchor` when given).
inline IntersectionReport check_intersecting(std::span<const Cycle> cycles,
                                             const std::optional<std::vector<Vertex>>& anchor = std::nullopt)
{
    std::vector<Vertex> universe;
    if (anchor) {
        universe = *anchor;
    } else {
        for (const auto& c : cycles)
            universe.insert(universe.end(), c.vertices().begin(), c.vertices().end());
    }
    const detail::VertexIndex index(std::move(universe));
    const std::size_t words = (index.size() + 63) / 64;
    std::vector<std::uint64_t> bits(cycles.size() * std::max<std::size_t>(words, 1), 0);
    for (std::size_t ci = 0; ci < cycles.size(); ++ci)
        for (const auto& v : cycles[ci].vertices())
            if (auto i = index.find(v))
                bits[ci * words + *i / 64] |= std::uint64_t{1} << (*i % 64);

    IntersectionReport r;
    for (std::size_t a = 0; a < cycles.size(); ++a) {
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            ++r.pairs_checked;
            bool meet = false;
            for (std::size_t k = 0; k < words && !meet; ++k)
                meet = (bits[a * words + k] & bits[b * words + k]) != 0;
            if (!meet) {
                r.witness = std::make_pair(a, b);
                return r;
            }
        }
    }
    r.passed = true;
    return r;
}

inline IntersectionReport check_intersecting(const CycleSystem& sys,
                                             const std::optional<std::vector<Vertex>>& anchor = std::nullopt)
{
    return check_intersecting(std::span<const Cycle>(sys.cycles), anchor);
}

/// True iff V1 - V2 = {a - b} covers all of Z_w.
inline bool difference_cover(std::span<const int> v1, std::span<const int> v2, int w)
{
    if (w < 1)
        throw InvalidArgument("modulus must be positive");
    std::vector<char> hit(static_cast<std::size_t>(w), 0);
    for (int a : v1)
        for (int b : v2)
            hit[static_cast<std::size_t>(mod(static_cast<long long>(a) - b, w))] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

} // namespace evenweave

#endif

#ifndef EVENWEAVE_SYSTEM_HPP
#define EVENWEAVE_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/vertex.hpp"

namespace evenweave
{

/// K_V - I. When `factor` is absent the checker recovers I from the uncovered edges.
struct CompleteMinusFactor
{
    std::vector<Vertex> vertices;
    std::optional<std::vector<Edge>> factor;

    bool operator==(const CompleteMinusFactor&) const = default;
};

/// K_{X,Y}.
struct CompleteBipartite
{
    std::vector<Vertex> part_x;
    std::vector<Vertex> part_y;

    bool operator==(const CompleteBipartite&) const = default;
};

using HostGraph = std::variant<CompleteMinusFactor, CompleteBipartite>;

inline std::vector<Vertex> host_vertices(const HostGraph& host)
{
    if (const auto* k = std::get_if<CompleteMinusFactor>(&host))
        return k->vertices;
    const auto& b = std::get<CompleteBipartite>(host);
    std::vector<Vertex> out = b.part_x;
    out.insert(out.end(), b.part_y.begin(), b.part_y.end());
    return out;
}

inline std::size_t host_order(const HostGraph& host)
{
    if (const auto* k = std::get_if<CompleteMinusFactor>(&host))
        return k->vertices.size();
    const auto& b = std::get<CompleteBipartite>(host);
    return b.part_x.size() + b.part_y.size();
}

inline bool is_bipartite_host(const HostGraph& host) { return std::holds_alternative<CompleteBipartite>(host); }

struct CycleSystem
{
    std::vector<Cycle> cycles;
    HostGraph host;

    bool operator==(const CycleSystem&) const = default;
};

} // namespace evenweave

#endif

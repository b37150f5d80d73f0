#ifndef EVENWEAVE_VERTEX_HPP
#define EVENWEAVE_VERTEX_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "evenweave/error.hpp"
#include "evenweave/group.hpp"

namespace evenweave
{

enum class VertexKind : std::uint8_t { infty, infty_prime, residue, dihedral, bipartite };

/**
 * A point of a host graph.
 *
 *   residue(n)       cyclic group element, or a plain integer label      "n"
 *   dihedral(j, e)   x^j l^e in a dihedral group                        "x^j" / "x^j*l"
 *   infty            the fixed point oo                                 "inf"
 *   infty_prime      the fixed point oo'                                "inf'"
 *   bi(z, side)      (z, side) in Z_w x Z_2                             "z@side"
 */
struct Vertex
{
    VertexKind kind = VertexKind::residue;
    int a = 0;
    int b = 0;

    static Vertex residue(int n) { return {VertexKind::residue, n, 0}; }
    static Vertex dihedral(int j, int e) { return {VertexKind::dihedral, j, e}; }
    static Vertex infty() { return {VertexKind::infty, 0, 0}; }
    static Vertex infty_prime() { return {VertexKind::infty_prime, 0, 0}; }
    static Vertex bi(int z, int side) { return {VertexKind::bipartite, z, side}; }

    static Vertex of(const GroupElement& g)
    {
        return g.group.is_cyclic() ? residue(g.j) : dihedral(g.j, g.e);
    }

    bool is_infinite() const { return kind == VertexKind::infty || kind == VertexKind::infty_prime; }
    bool is_bipartite() const { return kind == VertexKind::bipartite; }
    bool is_group() const { return kind == VertexKind::residue || kind == VertexKind::dihedral; }

    int side() const { return b; }

    auto operator<=>(const Vertex&) const = default;
};

/// Interprets a residue/dihedral vertex as an element of `g`; throws on domain mismatch.
inline GroupElement as_element(const Vertex& v, const GroupSpec& g)
{
    if (v.kind == VertexKind::residue && g.is_cyclic() && v.a >= 0 && v.a < g.order())
        return g.element(v.a);
    if (v.kind == VertexKind::dihedral && g.is_dihedral() && v.a >= 0 && v.a < g.rotation_order()
        && (v.b == 0 || v.b == 1))
        return g.element(v.a, v.b);
    throw InvalidArgument("vertex is not an element of " + g.name());
}

inline std::string to_string(const Vertex& v)
{
    switch (v.kind) {
    case VertexKind::residue:
        return std::to_string(v.a);
    case VertexKind::dihedral:
        return "x^" + std::to_string(v.a) + (v.b ? "*l" : "");
    case VertexKind::infty:
        return "inf";
    case VertexKind::infty_prime:
        return "inf'";
    case VertexKind::bipartite:
        return std::to_string(v.a) + "@" + std::to_string(v.b);
    }
    return "?";
}

/// Unordered edge with u < v.
struct Edge
{
    Vertex u;
    Vertex v;

    static Edge make(const Vertex& a, const Vertex& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    auto operator<=>(const Edge&) const = default;
};

inline std::string to_string(const Edge& e) { return "{" + to_string(e.u) + "," + to_string(e.v) + "}"; }

} // namespace evenweave

template <>
struct std::hash<evenweave::Vertex>
{
    std::size_t operator()(const evenweave::Vertex& v) const noexcept
    {
        const std::uint64_t packed = (static_cast<std::uint64_t>(v.kind) << 56)
                                     ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.a)) << 8)
                                     ^ static_cast<std::uint64_t>(static_cast<std::uint8_t>(v.b));
        return std::hash<std::uint64_t>{}(packed);
    }
};

#endif

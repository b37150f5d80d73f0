#ifndef EVENWEAVE_HAMILTONIAN_HPP
#define EVENWEAVE_HAMILTONIAN_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/labeled.hpp"

namespace evenweave
{

/**
 * CS(v, v) on Z_{v-2} + {inf, inf'}: the zig-zag Hamiltonian cycles of K_{v-1}
 * on Z_{v-2} + {inf}, with inf' inserted into the unique diameter edge
 * {a, a + (v-2)/2} of each zig-zag. I = all diameters plus {inf, inf'}.
 */
inline LabeledSystem hamiltonian_cs(int v)
{
    if (v < 4 || v % 2 != 0)
        throw InvalidArgument("CS(v, v) needs even v >= 4, got " + std::to_string(v));
    const int n = (v - 2) / 2;
    const int m = 2 * n;

    std::vector<int> zigzag{0};
    for (int k = 1; static_cast<int>(zigzag.size()) < m; ++k) {
        zigzag.push_back(k);
        if (static_cast<int>(zigzag.size()) < m)
            zigzag.push_back(m - k);
    }
    std::size_t diameter = 0;  // position p with {zigzag[p], zigzag[p+1]} a diameter
    for (std::size_t p = 0; p + 1 < zigzag.size(); ++p)
        if (mod(zigzag[p + 1] - zigzag[p], m) == n)
            diameter = p;

    CompleteMinusFactor host;
    for (int z = 0; z < m; ++z)
        host.vertices.push_back(Vertex::residue(z));
    host.vertices.push_back(Vertex::infty());
    host.vertices.push_back(Vertex::infty_prime());

    LabeledSystem out;
    std::vector<Edge> factor{Edge::make(Vertex::infty(), Vertex::infty_prime())};
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> c{Vertex::infty()};
        for (std::size_t p = 0; p < zigzag.size(); ++p) {
            c.push_back(Vertex::residue(mod(zigzag[p] + i, m)));
            if (p == diameter)
                c.push_back(Vertex::infty_prime());
        }
        factor.push_back(Edge::make(Vertex::residue(mod(zigzag[diameter] + i, m)),
                                    Vertex::residue(mod(zigzag[diameter + 1] + i, m))));
        out.system.cycles.emplace_back(std::move(c));
    }
    std::sort(factor.begin(), factor.end());
    host.factor = std::move(factor);
    out.vertex_set = host.vertices;
    out.system.host = std::move(host);
    out.provenance = {Construction::hamiltonian, {{"v", v}}};
    return out;
}

} // namespace evenweave

#endif

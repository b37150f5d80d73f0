#ifndef EVENWEAVE_STARTERS_HPP
#define EVENWEAVE_STARTERS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/group.hpp"
#include "evenweave/system.hpp"

namespace evenweave
{

/// Candidate starter for a 2-pyramidal system of K_v - I, v = |G| + 2.
struct PyramidalStarter
{
    std::vector<Cycle> cycles;
    GroupSpec group;
    GroupElement lambda;
    int t;

    int order() const { return group.order() + 2; }
};

/// Candidate starter for a semiregular system of K_{w,w} over Z_w.
struct BipartiteStarter
{
    std::vector<Cycle> cycles;
    int w;
    int t;
};

struct PyramidalReport
{
    std::vector<std::string> malformed;

    // condition 1: exactly one cycle through oo, exactly one through oo', the oo-cycle short
    int infty_cycles = 0;
    int infty_prime_cycles = 0;
    bool infty_cycle_short = false;
    bool infinity_ok = false;

    // condition 2: differences cover G \ {1, lambda}
    std::vector<GroupElement> missing;
    std::vector<GroupElement> surplus;  // orbit-weighted multiplicity above one, or lambda itself
    bool coverage_ok = false;

    // condition 3: s + 2l <= v / 2t
    int short_count = 0;
    int long_count = 0;
    int bound = 0;
    bool count_ok = false;

    std::vector<std::string> warnings;

    bool passed() const { return malformed.empty() && infinity_ok && coverage_ok && count_ok; }
};

struct BipartiteReport
{
    std::vector<std::string> malformed;
    std::vector<GroupElement> missing;
    std::vector<GroupElement> duplicated;
    std::vector<std::string> warnings;

    bool passed() const { return malformed.empty() && missing.empty() && duplicated.empty(); }
};

template <class Report>
struct StarterError : Error
{
    StarterError(const std::string& what, Report r) : Error(what), report(std::move(r)) {}
    Report report;
};

inline PyramidalReport validate_pyramidal(const PyramidalStarter& s)
{
    PyramidalReport r;
    const GroupSpec& g = s.group;
    const int v = s.order();
    const int len = 2 * s.t;

    if (s.t < 2)
        r.malformed.push_back("half cycle length t must be at least 2");
    if (s.lambda.group != g || s.lambda == g.identity() || compose(s.lambda, s.lambda) != g.identity())
        r.malformed.push_back("lambda " + to_string(s.lambda) + " is not an involution of " + g.name());
    if (len <= 0 || v % len != 0)
        r.malformed.push_back("order " + std::to_string(v) + " is not a multiple of the cycle length");
    if (s.cycles.empty())
        r.malformed.push_back("empty starter");

    std::vector<std::size_t> stabilizers(s.cycles.size(), 1);
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        const Cycle& c = s.cycles[i];
        bool domain_ok = true;
        for (const auto& x : c.vertices()) {
            if (x.is_infinite())
                continue;
            try {
                (void)as_element(x, g);
            } catch (const InvalidArgument&) {
                domain_ok = false;
            }
        }
        if (!domain_ok) {
            r.malformed.push_back("cycle " + c.str() + " has a vertex outside " + g.name() + " + {inf, inf'}");
            continue;
        }
        if (static_cast<int>(c.length()) != len)
            r.malformed.push_back("cycle " + c.str() + " has length " + std::to_string(c.length()) + ", expected "
                                  + std::to_string(len));
        stabilizers[i] = orbit(c, g).stabilizer;
    }
    if (!r.malformed.empty())
        return r;

    // condition 1
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        if (s.cycles[i].contains(Vertex::infty())) {
            ++r.infty_cycles;
            r.infty_cycle_short = stabilizers[i] > 1;
        }
        if (s.cycles[i].contains(Vertex::infty_prime()))
            ++r.infty_prime_cycles;
    }
    if (r.infty_cycles != 1)
        r.infty_cycle_short = false;
    r.infinity_ok = r.infty_cycles == 1 && r.infty_prime_cycles == 1 && r.infty_cycle_short;

    // condition 2, with orbit-weighted multiplicities: a difference d of a cycle with
    // stabilizer H accounts for mult(d) / |H| edge classes of the expanded system.
    std::map<GroupElement, int> weight;
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        const auto diffs = delta(s.cycles[i], g);
        for (const auto& [d, m] : diffs.counts()) {
            const int stab = static_cast<int>(stabilizers[i]);
            if (m % stab != 0)
                r.malformed.push_back("difference multiplicity not divisible by stabilizer order in "
                                      + s.cycles[i].str());
            weight[d] += m / stab;
        }
    }
    for (const auto& d : g.elements()) {
        if (d == g.identity())
            continue;
        const int w = weight.count(d) ? weight[d] : 0;
        if (d == s.lambda) {
            if (w > 0)
                r.surplus.push_back(d);
            continue;
        }
        if (w == 0)
            r.missing.push_back(d);
        else if (w > 1)
            r.surplus.push_back(d);
    }
    r.coverage_ok = r.missing.empty() && r.surplus.empty();

    // condition 3
    for (auto st : stabilizers)
        (st > 1 ? r.short_count : r.long_count) += 1;
    r.bound = v / len;
    r.count_ok = r.short_count + 2 * r.long_count <= r.bound;
    if (r.count_ok && r.short_count + 2 * r.long_count < r.bound)
        r.warnings.push_back("condition 3 holds with slack: s + 2l = "
                             + std::to_string(r.short_count + 2 * r.long_count) + " < " + std::to_string(r.bound));
    for (std::size_t i = 0; i < s.cycles.size(); ++i)
        if (stabilizers[i] > 2)
            r.warnings.push_back("cycle " + s.cycles[i].str() + " has stabilizer of order "
                                 + std::to_string(stabilizers[i]));
    return r;
}

/// K_v - I with I = {{x, lambda x}} + {{oo, oo'}}.
inline CompleteMinusFactor pyramidal_host(const GroupSpec& g, const GroupElement& lambda)
{
    CompleteMinusFactor host;
    std::vector<Edge> factor;
    for (const auto& x : g.elements()) {
        host.vertices.push_back(Vertex::of(x));
        const auto e = Edge::make(Vertex::of(x), Vertex::of(compose(lambda, x)));
        if (std::find(factor.begin(), factor.end(), e) == factor.end())
            factor.push_back(e);
    }
    host.vertices.push_back(Vertex::infty());
    host.vertices.push_back(Vertex::infty_prime());
    factor.push_back(Edge::make(Vertex::infty(), Vertex::infty_prime()));
    std::sort(factor.begin(), factor.end());
    host.factor = std::move(factor);
    return host;
}

/// Union of the G-orbits of a valid starter.
inline CycleSystem expand_pyramidal(const PyramidalStarter& s)
{
    auto report = validate_pyramidal(s);
    if (!report.passed())
        throw StarterError<PyramidalReport>("invalid (K_G, 2t)-starter system over " + s.group.name(), report);
    CycleSystem out{{}, pyramidal_host(s.group, s.lambda)};
    for (const auto& c : s.cycles) {
        auto orb = orbit(c, s.group);
        out.cycles.insert(out.cycles.end(), orb.cycles.begin(), orb.cycles.end());
    }
    return out;
}

inline BipartiteReport validate_bipartite(const BipartiteStarter& s)
{
    BipartiteReport r;
    if (s.w < 1 || s.t < 2) {
        r.malformed.push_back("need w >= 1 and t >= 2");
        return r;
    }
    if (s.w < s.t)
        r.malformed.push_back("w = " + std::to_string(s.w) + " is smaller than t = " + std::to_string(s.t));
    if ((static_cast<long long>(s.w) * s.w) % (2 * s.t) != 0)
        r.malformed.push_back("w^2 is not a multiple of 2t");
    DiffMultiset all;
    for (const auto& c : s.cycles) {
        if (!c.is_bipartite()) {
            r.malformed.push_back("cycle " + c.str() + " is not a cycle of K_{w,w}");
            continue;
        }
        if (static_cast<int>(c.length()) != 2 * s.t)
            r.malformed.push_back("cycle " + c.str() + " has length " + std::to_string(c.length()) + ", expected "
                                  + std::to_string(2 * s.t));
        try {
            all += oriented_delta(c, s.w);
        } catch (const InvalidArgument& e) {
            r.malformed.push_back(e.what());
        }
    }
    const auto zw = GroupSpec::cyclic(s.w);
    for (const auto& d : zw.elements()) {
        const int m = all.count(d);
        if (m == 0)
            r.missing.push_back(d);
        else if (m > 1)
            r.duplicated.push_back(d);
    }
    return r;
}

inline CompleteBipartite bipartite_host(int w)
{
    CompleteBipartite host;
    for (int z = 0; z < w; ++z) {
        host.part_x.push_back(Vertex::bi(z, 0));
        host.part_y.push_back(Vertex::bi(z, 1));
    }
    return host;
}

/// Union of the Z_w-orbits of a valid starter; a semiregular system of K_{w,w}.
inline CycleSystem expand_bipartite(const BipartiteStarter& s)
{
    auto report = validate_bipartite(s);
    if (!report.passed())
        throw StarterError<BipartiteReport>("invalid (K_{w,w}, 2t)-starter system for w = " + std::to_string(s.w),
                                            report);
    CycleSystem out{{}, bipartite_host(s.w)};
    const auto zw = GroupSpec::cyclic(s.w);
    for (const auto& c : s.cycles) {
        auto orb = orbit(c, zw);
        out.cycles.insert(out.cycles.end(), orb.cycles.begin(), orb.cycles.end());
    }
    return out;
}

} // namespace evenweave

#endif

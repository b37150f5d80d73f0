#ifndef EVENWEAVE_LABELED_HPP
#define EVENWEAVE_LABELED_HPP

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evenweave/error.hpp"
#include "evenweave/system.hpp"

namespace evenweave
{

enum class Construction {
    four,         // dihedral 2-pyramidal CS(4s, 4)
    int1,         // intersecting CS(4t, 2t)
    int2,         // intersecting CS(6t, 2t), t odd
    strong1,      // intersecting CS(K_{2t,2t}, 2t), t even
    strong2,      // intersecting CS(K_{4t,4t}, 2t), t odd > 5
    strong3,      // intersecting CS(K_{6,6}, 6)
    strong5,      // intersecting CS(K_{10,10}, 10)
    hamiltonian,  // CS(v, v)
    generic,      // CS(K_{2t,4t}, 2t)
    main1,
    main2,
    main3,
};

inline constexpr std::array<std::pair<Construction, std::string_view>, 12> construction_names{{
    {Construction::four, "four"},
    {Construction::int1, "int1"},
    {Construction::int2, "int2"},
    {Construction::strong1, "strong1"},
    {Construction::strong2, "strong2"},
    {Construction::strong3, "strong3"},
    {Construction::strong5, "strong5"},
    {Construction::hamiltonian, "hamiltonian"},
    {Construction::generic, "generic"},
    {Construction::main1, "main1"},
    {Construction::main2, "main2"},
    {Construction::main3, "main3"},
}};

inline std::string_view name_of(Construction c)
{
    for (const auto& [k, n] : construction_names)
        if (k == c)
            return n;
    return "?";
}

/// Construction tag with integer parameters, rendered like "int1(t=4)".
struct Provenance
{
    Construction kind = Construction::four;
    std::vector<std::pair<std::string, int>> params;

    std::optional<int> param(std::string_view key) const
    {
        for (const auto& [k, v] : params)
            if (k == key)
                return v;
        return std::nullopt;
    }

    std::string tag() const
    {
        std::string out(name_of(kind));
        out += '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i)
                out += ',';
            out += params[i].first + "=" + std::to_string(params[i].second);
        }
        out += ')';
        return out;
    }

    static Provenance parse(std::string_view text)
    {
        const auto open = text.find('(');
        if (open == std::string_view::npos || text.empty() || text.back() != ')')
            throw InvalidArgument("malformed provenance tag '" + std::string(text) + "'");
        const auto name = text.substr(0, open);
        Provenance p;
        bool known = false;
        for (const auto& [k, n] : construction_names)
            if (n == name) {
                p.kind = k;
                known = true;
            }
        if (!known)
            throw InvalidArgument("unknown construction '" + std::string(name) + "'");
        auto body = text.substr(open + 1, text.size() - open - 2);
        while (!body.empty()) {
            const auto comma = body.find(',');
            const auto item = body.substr(0, comma);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos || eq == 0)
                throw InvalidArgument("malformed provenance parameter '" + std::string(item) + "'");
            int value = 0;
            const auto digits = item.substr(eq + 1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec != std::errc{} || ptr != digits.data() + digits.size())
                throw InvalidArgument("malformed provenance value '" + std::string(digits) + "'");
            p.params.emplace_back(std::string(item.substr(0, eq)), value);
            if (comma == std::string_view::npos)
                break;
            body = body.substr(comma + 1);
        }
        return p;
    }

    bool operator==(const Provenance&) const = default;
};

enum class AnchorCheck {
    unchecked,
    verified,   // check_intersecting ran on this system with its anchors
    inherited,  // carried over from a relabeling that fixes every anchor
    failed,
};

/**
 * A cycle system together with its ordered label list, where it came from,
 * and optionally the anchor set X on which any two cycles must meet.
 */
struct LabeledSystem
{
    CycleSystem system;
    std::vector<Vertex> vertex_set;
    Provenance provenance;
    std::optional<std::vector<Vertex>> anchors;
    AnchorCheck anchor_check = AnchorCheck::unchecked;
    std::vector<std::string> notes;

    std::size_t cycle_length() const { return system.cycles.empty() ? 0 : system.cycles.front().length(); }
    std::size_t order() const { return vertex_set.size(); }
};

} // namespace evenweave

#endif

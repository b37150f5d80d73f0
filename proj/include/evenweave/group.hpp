#ifndef EVENWEAVE_GROUP_HPP
#define EVENWEAVE_GROUP_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "evenweave/error.hpp"

namespace evenweave
{

enum class GroupKind : unsigned char { cyclic, dihedral };

inline int mod(long long a, long long n)
{
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

struct GroupElement;

/**
 * One of the two acting groups: the cyclic group Z_n, or the dihedral group
 * D_{4s-2} = <x, l | x^{2s-1} = l^2 = 1, l x = x^{-1} l>.
 */
class GroupSpec
{
public:
    static GroupSpec cyclic(int n)
    {
        if (n < 1)
            throw InvalidArgument("cyclic group order must be positive, got " + std::to_string(n));
        return GroupSpec(GroupKind::cyclic, n);
    }

    static GroupSpec dihedral(int s)
    {
        if (s < 2)
            throw InvalidArgument("dihedral parameter s must be at least 2, got " + std::to_string(s));
        return GroupSpec(GroupKind::dihedral, s);
    }

    GroupKind kind() const { return kind_; }
    bool is_cyclic() const { return kind_ == GroupKind::cyclic; }
    bool is_dihedral() const { return kind_ == GroupKind::dihedral; }

    /// n for Z_n, s for D_{4s-2}.
    int param() const { return param_; }

    /// Order of the rotation subgroup <x> (the whole group when cyclic).
    int rotation_order() const { return is_cyclic() ? param_ : 2 * param_ - 1; }

    int order() const { return is_cyclic() ? param_ : 4 * param_ - 2; }

    inline GroupElement identity() const;
    inline GroupElement element(long long j, int e = 0) const;
    inline GroupElement from_index(int index) const;
    inline std::vector<GroupElement> elements() const;

    std::string name() const
    {
        return is_cyclic() ? "Z_" + std::to_string(param_) : "D_" + std::to_string(order());
    }

    auto operator<=>(const GroupSpec&) const = default;

private:
    GroupSpec(GroupKind kind, int param) : kind_(kind), param_(param) {}

    GroupKind kind_;
    int param_;
};

/**
 * Canonical element encoding. Cyclic: residue j in [0, n-1], e = 0.
 * Dihedral: x^j l^e with j in [0, 2s-2] and e in {0, 1}.
 */
struct GroupElement
{
    GroupSpec group;
    int j = 0;
    int e = 0;

    /// Dense index in [0, order).
    int index() const { return e * group.rotation_order() + j; }

    auto operator<=>(const GroupElement&) const = default;
};

GroupElement GroupSpec::identity() const { return GroupElement{*this, 0, 0}; }

GroupElement GroupSpec::element(long long j, int e) const
{
    if (is_cyclic() && e != 0)
        throw InvalidArgument("cyclic group element cannot carry a reflection bit");
    if (e != 0 && e != 1)
        throw InvalidArgument("reflection bit must be 0 or 1");
    return GroupElement{*this, mod(j, rotation_order()), e};
}

GroupElement GroupSpec::from_index(int index) const
{
    if (index < 0 || index >= order())
        throw InvalidArgument("element index out of range for " + name());
    return GroupElement{*this, index % rotation_order(), index / rotation_order()};
}

std::vector<GroupElement> GroupSpec::elements() const
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (int i = 0; i < order(); ++i)
        out.push_back(from_index(i));
    return out;
}

inline GroupElement compose(const GroupElement& a, const GroupElement& b)
{
    if (a.group != b.group)
        throw InvalidArgument("cannot compose elements of " + a.group.name() + " and " + b.group.name());
    const GroupSpec& g = a.group;
    if (g.is_cyclic())
        return g.element(static_cast<long long>(a.j) + b.j);
    // (x^a l^e)(x^b l^f) = x^{a + (-1)^e b} l^{e xor f}
    const long long j = a.e == 0 ? static_cast<long long>(a.j) + b.j : static_cast<long long>(a.j) - b.j;
    return g.element(j, a.e ^ b.e);
}

inline GroupElement inverse(const GroupElement& a)
{
    if (a.e == 1)
        return a;  // reflections are involutions
    return a.group.element(-static_cast<long long>(a.j));
}

/// Right quotient a * b^{-1}; plain subtraction for cyclic groups.
inline GroupElement quotient(const GroupElement& a, const GroupElement& b)
{
    return compose(a, inverse(b));
}

inline std::vector<GroupElement> involutions(const GroupSpec& g)
{
    std::vector<GroupElement> out;
    for (const auto& a : g.elements())
        if (a != g.identity() && compose(a, a) == g.identity())
            out.push_back(a);
    return out;
}

/// Cyclic as the decimal residue; dihedral as "x^j" or "x^j*l".
inline std::string to_string(const GroupElement& a)
{
    if (a.group.is_cyclic())
        return std::to_string(a.j);
    return "x^" + std::to_string(a.j) + (a.e ? "*l" : "");
}

} // namespace evenweave

template <>
struct std::hash<evenweave::GroupElement>
{
    std::size_t operator()(const evenweave::GroupElement& a) const noexcept
    {
        const auto kind = static_cast<std::size_t>(a.group.kind());
        return (((kind * 1000003u) ^ static_cast<std::size_t>(a.group.param())) * 1000003u)
               ^ static_cast<std::size_t>(a.index());
    }
};

#endif

#ifndef EVENWEAVE_PATHS_HPP
#define EVENWEAVE_PATHS_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/verifier.hpp"

namespace evenweave
{

/// Integer paths A (t vertices) and B (t-2 vertices) for the CS(4t, 2t) construction.
struct PathsAB
{
    std::vector<int> a;
    std::vector<int> b;
    bool from_formula = true;

    Path path_a() const { return as_path(a); }
    Path path_b() const { return as_path(b); }

private:
    static Path as_path(const std::vector<int>& xs)
    {
        std::vector<Vertex> vs;
        for (int x : xs)
            vs.push_back(Vertex::residue(x));
        return Path(std::move(vs));
    }
};

/// The case data of the four formulas: vertex sets and the claimed difference sets (signed).
struct LemmaAbRow
{
    int s = 0;
    int i = 0;  // t = 4s + i, i in {-1, 0, 1, 2}
    std::set<int> vertices_a;
    std::set<int> vertices_b;
    std::set<int> delta_a;
    std::set<int> delta_b;
};

namespace detail
{

inline std::set<int> plus_minus(const std::set<int>& xs)
{
    std::set<int> out;
    for (int x : xs) {
        out.insert(x);
        out.insert(-x);
    }
    return out;
}

inline std::set<int> interval(int lo, int hi)
{
    std::set<int> out;
    for (int x = lo; x <= hi; ++x)
        out.insert(x);
    return out;
}

inline void push_pair(std::vector<int>& out, int p, int q)
{
    out.push_back(p);
    out.push_back(q);
}

inline std::pair<int, int> ab_case(int t)
{
    int s = t / 4;
    int i = t % 4;
    if (i == 3) {
        ++s;
        i = -1;
    }
    return {s, i};
}

} // namespace detail

/// Signed integer differences +-(p_k - p_{k+1}) of consecutive vertices, sorted.
inline std::vector<int> signed_differences(const std::vector<int>& path)
{
    std::vector<int> out;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        out.push_back(path[k] - path[k + 1]);
        out.push_back(path[k + 1] - path[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline LemmaAbRow lemma_ab_row(int t)
{
    if (t < 3)
        throw InvalidArgument("paths A, B need t >= 3");
    using detail::interval;
    using detail::plus_minus;
    const auto [s, i] = detail::ab_case(t);
    LemmaAbRow r{s, i, {}, {}, {}, {}};
    switch (i) {
    case -1:
        r.vertices_a = interval(0, 4 * s - 1);
        r.vertices_a.erase(3 * s - 1);
        r.vertices_b = interval(1, 2 * s - 2);
        r.vertices_b.merge(interval(6 * s - 2, 8 * s - 4));
        r.delta_a = plus_minus(interval(2, 4 * s - 1));
        r.delta_b = plus_minus(interval(4 * s, 8 * s - 5));
        break;
    case 0:
        r.vertices_a = interval(0, 4 * s);
        r.vertices_a.erase(3 * s);
        r.vertices_b = interval(1, 2 * s - 1);
        r.vertices_b.merge(interval(6 * s, 8 * s - 2));
        r.delta_a = plus_minus(interval(2, 4 * s));
        r.delta_b = plus_minus(interval(4 * s + 1, 8 * s - 3));
        break;
    case 1: {
        r.vertices_a = interval(0, 4 * s + 2);
        r.vertices_a.erase(3 * s);
        r.vertices_a.erase(3 * s + 1);
        r.vertices_b = interval(1, 2 * s - 1);
        r.vertices_b.insert(4 * s - 2);
        r.vertices_b.merge(interval(6 * s + 2, 8 * s));
        auto da = interval(2, 4 * s + 2);
        da.erase(2 * s - 1);
        r.delta_a = plus_minus(da);
        auto db = interval(4 * s + 3, 8 * s - 1);
        db.insert(2 * s - 1);
        r.delta_b = plus_minus(db);
        break;
    }
    default: {
        r.vertices_a = interval(0, 4 * s + 3);
        r.vertices_a.erase(3 * s + 1);
        r.vertices_a.erase(3 * s + 2);
        r.vertices_b = interval(1, 2 * s - 1);
        r.vertices_b.insert(4 * s + 3);
        r.vertices_b.merge(interval(6 * s + 3, 8 * s + 2));
        auto da = interval(2, 4 * s + 3);
        da.erase(2 * s);
        r.delta_a = plus_minus(da);
        auto db = interval(4 * s + 4, 8 * s + 1);
        db.insert(2 * s);
        r.delta_b = plus_minus(db);
        break;
    }
    }
    return r;
}

/// The four case formulas evaluated literally, without any check.
inline PathsAB lemma_ab_formula(int t)
{
    if (t < 3)
        throw InvalidArgument("paths A, B need t >= 3");
    const auto [s, i] = detail::ab_case(t);
    PathsAB p;
    auto& A = p.a;
    auto& B = p.b;
    using detail::push_pair;
    switch (i) {
    case -1:
        A.push_back(2 * s - 1);
        for (int k = 0; k < s; ++k)
            push_pair(A, k, 4 * s - 1 - k);
        for (int k = s; k <= 2 * s - 2; ++k)
            push_pair(A, k, 4 * s - k - 2);
        for (int k = 1; k <= 2 * s - 2; ++k)
            push_pair(B, 8 * s - 3 - k, k);
        B.push_back(6 * s - 2);
        break;
    case 0:
        A.push_back(2 * s);
        for (int k = 0; k < s; ++k)
            push_pair(A, k, 4 * s - k);
        for (int k = s; k <= 2 * s - 2; ++k)
            push_pair(A, k, 4 * s - k - 1);
        A.push_back(2 * s - 1);
        for (int k = 1; k <= 2 * s - 1; ++k)
            push_pair(B, 8 * s - 1 - k, k);
        break;
    case 1:
        A.push_back(2 * s);
        for (int k = 0; k <= s; ++k)
            push_pair(A, k, 4 * s + 2 - k);
        for (int k = s + 1; k <= 2 * s - 1; ++k)
            push_pair(A, k, 4 * s - k);
        for (int k = 1; k <= 2 * s - 1; ++k)
            push_pair(B, 8 * s + 1 - k, k);
        B.push_back(4 * s - 2);
        break;
    default:
        A.push_back(2 * s + 1);
        for (int k = 0; k <= s; ++k)
            push_pair(A, k, 4 * s + 3 - k);
        for (int k = s + 1; k <= 2 * s - 1; ++k)
            push_pair(A, k, 4 * s - k + 1);
        A.push_back(2 * s);
        for (int k = 1; k <= 2 * s - 1; ++k)
            push_pair(B, 8 * s + 3 - k, k);
        B.push_back(6 * s + 3);
        B.push_back(4 * s + 3);
        break;
    }
    return p;
}

/// Shape conditions on (A, B): sizes, a_t - a_1 = +-1, b_1 = 2t - 2, distinct vertices,
/// and the differences of A and B together are +-[2, 2t-3], each exactly once.
inline bool lemma_ab_holds(int t, const std::vector<int>& a, const std::vector<int>& b)
{
    if (static_cast<int>(a.size()) != t || static_cast<int>(b.size()) != t - 2)
        return false;
    if (std::abs(a.back() - a.front()) != 1 || b.front() != 2 * t - 2)
        return false;
    if (std::set<int>(a.begin(), a.end()).size() != a.size() || std::set<int>(b.begin(), b.end()).size() != b.size())
        return false;
    auto all = signed_differences(a);
    const auto db = signed_differences(b);
    all.insert(all.end(), db.begin(), db.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want;
    for (int d = -(2 * t - 3); d <= 2 * t - 3; ++d)
        if (std::abs(d) >= 2)
            want.push_back(d);
    return all == want;
}

/// The formula output additionally matches the case row (vertex sets and difference sets).
inline bool lemma_ab_matches_row(int t, const PathsAB& p)
{
    const auto row = lemma_ab_row(t);
    const auto da = signed_differences(p.a);
    const auto db = signed_differences(p.b);
    return std::set<int>(p.a.begin(), p.a.end()) == row.vertices_a
        && std::set<int>(p.b.begin(), p.b.end()) == row.vertices_b
        && std::vector<int>(row.delta_a.begin(), row.delta_a.end()) == da
        && std::vector<int>(row.delta_b.begin(), row.delta_b.end()) == db;
}

/// Vertex sets of the two starter cycles of CS(4t, 2t) built from (A, B), reduced mod 4t - 2.
inline std::pair<std::vector<int>, std::vector<int>> int1_vertex_sets(int t, const std::vector<int>& a,
                                                                      const std::vector<int>& b)
{
    const int n = 4 * t - 2;
    const int h = 2 * t - 1;
    std::vector<int> v1;
    std::vector<int> v2;
    for (int x : a) {
        v1.push_back(mod(x, n));
        v1.push_back(mod(x + h, n));
    }
    v2.push_back(mod(h, n));
    v2.push_back(mod(2 * h, n));
    for (int x : b) {
        v2.push_back(mod(x, n));
        v2.push_back(mod(x + h, n));
    }
    return {v1, v2};
}

/// difference_cover on the two starter cycles: every pair of translates meets.
inline bool int1_intersecting(int t, const std::vector<int>& a, const std::vector<int>& b)
{
    const auto [v1, v2] = int1_vertex_sets(t, a, b);
    const int n = 4 * t - 2;
    return difference_cover(v1, v1, n) && difference_cover(v1, v2, n);
}

namespace detail
{

/// Depth-first search for (A, B) with A on `pool_a`, B on `pool_b` (both sorted).
/// Residues mod 2t - 1 must be distinct on A and on B + {2t - 1}.
class AbSearch
{
public:
    AbSearch(int t, std::vector<int> pool_a, std::vector<int> pool_b,
             std::function<bool(const std::vector<int>&, const std::vector<int>&)> accept)
        : t_(t), h_(2 * t - 1), pool_a_(std::move(pool_a)), pool_b_(std::move(pool_b)), accept_(std::move(accept))
    {
    }

    std::optional<PathsAB> run()
    {
        used_diff_.assign(static_cast<std::size_t>(2 * t_), 0);
        for (int a0 : pool_a_) {
            a_ = {a0};
            res_a_ = {mod(a0, h_)};
            if (extend_a())
                return PathsAB{a_, b_, false};
        }
        return std::nullopt;
    }

private:
    bool diff_ok(int d) const { return d >= 2 && d <= 2 * t_ - 3 && !used_diff_[static_cast<std::size_t>(d)]; }

    bool extend_a()
    {
        if (static_cast<int>(a_.size()) == t_) {
            if (std::abs(a_.back() - a_.front()) != 1)
                return false;
            b_ = {2 * t_ - 2};
            res_b_ = {0, mod(2 * t_ - 2, h_)};
            if (std::find(pool_b_.begin(), pool_b_.end(), 2 * t_ - 2) == pool_b_.end())
                return false;
            return extend_b();
        }
        for (int x : pool_a_) {
            const int d = std::abs(x - a_.back());
            const int r = mod(x, h_);
            if (!diff_ok(d) || res_a_.count(r))
                continue;
            a_.push_back(x);
            res_a_.insert(r);
            used_diff_[static_cast<std::size_t>(d)] = 1;
            if (extend_a())
                return true;
            used_diff_[static_cast<std::size_t>(d)] = 0;
            res_a_.erase(r);
            a_.pop_back();
        }
        return false;
    }

    bool extend_b()
    {
        if (static_cast<int>(b_.size()) == t_ - 2) {
            for (int d = 2; d <= 2 * t_ - 3; ++d)
                if (!used_diff_[static_cast<std::size_t>(d)])
                    return false;
            return !accept_ || accept_(a_, b_);
        }
        for (int x : pool_b_) {
            const int d = std::abs(x - b_.back());
            const int r = mod(x, h_);
            if (!diff_ok(d) || res_b_.count(r))
                continue;
            b_.push_back(x);
            res_b_.insert(r);
            used_diff_[static_cast<std::size_t>(d)] = 1;
            if (extend_b())
                return true;
            used_diff_[static_cast<std::size_t>(d)] = 0;
            res_b_.erase(r);
            b_.pop_back();
        }
        return false;
    }

    int t_;
    int h_;
    std::vector<int> pool_a_;
    std::vector<int> pool_b_;
    std::function<bool(const std::vector<int>&, const std::vector<int>&)> accept_;
    std::vector<int> a_, b_;
    std::set<int> res_a_, res_b_;
    std::vector<char> used_diff_;
};

} // namespace detail

/**
 * Search for (A, B) satisfying lemma_ab_holds whose CS(4t, 2t) is intersecting.
 * The case vertex sets are tried first, then A within [0, 2t-2] and B within [1, 2t-2].
 */
inline std::optional<PathsAB> search_paths_ab(int t)
{
    if (t < 3)
        throw InvalidArgument("paths A, B need t >= 3");
    auto accept = [t](const std::vector<int>& a, const std::vector<int>& b) { return int1_intersecting(t, a, b); };
    const auto row = lemma_ab_row(t);
    if (auto p = detail::AbSearch(t, {row.vertices_a.begin(), row.vertices_a.end()},
                                  {row.vertices_b.begin(), row.vertices_b.end()}, accept)
                     .run())
        return p;
    std::vector<int> pool_a;
    std::vector<int> pool_b;
    for (int x = 0; x <= 2 * t - 2; ++x) {
        pool_a.push_back(x);
        if (x >= 1)
            pool_b.push_back(x);
    }
    return detail::AbSearch(t, pool_a, pool_b, accept).run();
}

/// Formula paths when they satisfy the shape conditions, otherwise a searched substitute.
inline PathsAB paths_AB(int t)
{
    auto p = lemma_ab_formula(t);
    if (lemma_ab_holds(t, p.a, p.b))
        return p;
    auto found = search_paths_ab(t);
    if (!found)
        throw ConstructionError("no paths A, B found for t = " + std::to_string(t));
    return *found;
}

} // namespace evenweave

#endif

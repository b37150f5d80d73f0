#ifndef EVENWEAVE_GENERIC_HPP
#define EVENWEAVE_GENERIC_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/exact_cover.hpp"
#include "evenweave/labeled.hpp"
#include "evenweave/verifier.hpp"

namespace evenweave
{

namespace detail
{

/**
 * Two cycles of length 2t on X = Z_{2t} x {0}, Y = Z_{2t} x {1, 2}, both through (0, 0),
 * such that the edge keys (y - x, h) over both cycles hit each of the 4t keys exactly once.
 * Their Z_{2t}-orbits decompose K_{2t,4t}. Vertices are returned as (z, h) pairs.
 */
class WeavingSearch
{
public:
    WeavingSearch(int t, std::uint64_t max_nodes) : t_(t), n_(2 * t), max_nodes_(max_nodes) {}

    std::optional<std::vector<std::vector<std::pair<int, int>>>> run()
    {
        used_.assign(static_cast<std::size_t>(2 * n_), 0);
        if (start(2))
            return cycles_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted_budget() const { return aborted_; }

private:
    char& key(int d, int h) { return used_[static_cast<std::size_t>((h - 1) * n_ + d)]; }

    bool start(int remaining)
    {
        cyc_ = {{0, 0}};
        seen_.assign(static_cast<std::size_t>(3 * n_), 0);
        seen_[0] = 1;
        return extend(remaining);
    }

    char& seen(const std::pair<int, int>& v) { return seen_[static_cast<std::size_t>(v.second * n_ + v.first)]; }

    bool extend(int remaining)
    {
        if (++nodes_ > max_nodes_) {
            aborted_ = true;
            return false;
        }
        const auto cur = cyc_.back();
        if (static_cast<int>(cyc_.size()) == 2 * t_) {
            const int d = mod(cur.first - cyc_.front().first, n_);
            if (key(d, cur.second))
                return false;
            key(d, cur.second) = 1;
            cycles_.push_back(cyc_);
            if (remaining == 1)
                return true;
            const auto saved = cyc_;
            const auto saved_seen = seen_;
            if (start(remaining - 1))
                return true;
            cyc_ = saved;
            seen_ = saved_seen;
            cycles_.pop_back();
            key(d, cur.second) = 0;
            return false;
        }
        if (cur.second == 0) {
            for (int h = 1; h <= 2; ++h)
                for (int d = 0; d < n_; ++d)
                    if (try_step(d, h, {mod(cur.first + d, n_), h}, remaining))
                        return true;
        } else {
            for (int d = 0; d < n_; ++d)
                if (try_step(d, cur.second, {mod(cur.first - d, n_), 0}, remaining))
                    return true;
        }
        return false;
    }

    bool try_step(int d, int h, std::pair<int, int> next, int remaining)
    {
        if (aborted_ || key(d, h) || seen(next))
            return false;
        key(d, h) = 1;
        seen(next) = 1;
        cyc_.push_back(next);
        if (extend(remaining))
            return true;
        cyc_.pop_back();
        seen(next) = 0;
        key(d, h) = 0;
        return false;
    }

    int t_;
    int n_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<char> used_;
    std::vector<char> seen_;
    std::vector<std::pair<int, int>> cyc_;
    std::vector<std::vector<std::pair<int, int>>> cycles_;
};

/**
 * Backtracking decomposition of K_{r,s} (sides Bi(z,0), z < r and Bi(z,1), z < s) into
 * cycles of length `len`. Each cycle starts at the lowest side-0 vertex with an unused edge.
 * `forced` cycles are taken as given before the search starts.
 */
class BipartiteBacktrack
{
public:
    BipartiteBacktrack(int r, int s, int len, SearchBudget budget) : r_(r), s_(s), len_(len), budget_(budget) {}

    std::optional<std::vector<Cycle>> run(const std::vector<Cycle>& forced = {})
    {
        free_.assign(static_cast<std::size_t>(r_ * s_), 1);
        remaining_ = r_ * s_;
        if (len_ < 4 || len_ % 2 != 0 || remaining_ % len_ != 0)
            return std::nullopt;
        for (const auto& c : forced) {
            for (const auto& [p, q] : c.edges()) {
                const auto& x = p.side() == 0 ? p : q;
                const auto& y = p.side() == 0 ? q : p;
                if (x.a >= r_ || y.a >= s_ || !edge(x.a, y.a))
                    return std::nullopt;
                edge(x.a, y.a) = 0;
                --remaining_;
            }
            out_.push_back(c);
        }
        start_ = std::chrono::steady_clock::now();
        if (next_cycle())
            return out_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted_budget() const { return aborted_; }

private:
    char& edge(int x, int y) { return free_[static_cast<std::size_t>(x * s_ + y)]; }

    bool over_budget()
    {
        if (++nodes_ > budget_.max_nodes)
            return aborted_ = true;
        if (budget_.max_seconds && (nodes_ & 0xfffu) == 0) {
            const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
            if (spent.count() > *budget_.max_seconds)
                return aborted_ = true;
        }
        return false;
    }

    bool next_cycle()
    {
        if (remaining_ == 0)
            return true;
        int x0 = 0;
        while (x0 < r_) {
            bool any = false;
            for (int y = 0; y < s_ && !any; ++y)
                any = edge(x0, y);
            if (any)
                break;
            ++x0;
        }
        path_ = {x0};
        on_path_x_.assign(static_cast<std::size_t>(r_), 0);
        on_path_y_.assign(static_cast<std::size_t>(s_), 0);
        on_path_x_[static_cast<std::size_t>(x0)] = 1;
        return grow();
    }

    // path_ alternates x, y, x, y, ...; even positions on side 0
    bool grow()
    {
        if (aborted_ || over_budget())
            return false;
        const int k = static_cast<int>(path_.size());
        const int cur = path_.back();
        if (k == len_) {
            const int x0 = path_.front();
            if (!edge(x0, cur))
                return false;
            edge(x0, cur) = 0;
            std::vector<Vertex> vs;
            for (int i = 0; i < len_; ++i)
                vs.push_back(Vertex::bi(path_[static_cast<std::size_t>(i)], i % 2));
            out_.emplace_back(std::move(vs));
            remaining_ -= len_;
            const auto saved_path = path_;
            const auto sx = on_path_x_;
            const auto sy = on_path_y_;
            if (next_cycle())
                return true;
            path_ = saved_path;
            on_path_x_ = sx;
            on_path_y_ = sy;
            remaining_ += len_;
            out_.pop_back();
            edge(x0, cur) = 1;
            return false;
        }
        if (k % 2 == 1) {
            for (int y = 0; y < s_; ++y) {
                if (on_path_y_[static_cast<std::size_t>(y)] || !edge(cur, y))
                    continue;
                edge(cur, y) = 0;
                on_path_y_[static_cast<std::size_t>(y)] = 1;
                path_.push_back(y);
                if (grow())
                    return true;
                path_.pop_back();
                on_path_y_[static_cast<std::size_t>(y)] = 0;
                edge(cur, y) = 1;
                if (aborted_)
                    return false;
            }
        } else {
            for (int x = 0; x < r_; ++x) {
                if (on_path_x_[static_cast<std::size_t>(x)] || !edge(x, cur))
                    continue;
                edge(x, cur) = 0;
                on_path_x_[static_cast<std::size_t>(x)] = 1;
                path_.push_back(x);
                if (grow())
                    return true;
                path_.pop_back();
                on_path_x_[static_cast<std::size_t>(x)] = 0;
                edge(x, cur) = 1;
                if (aborted_)
                    return false;
            }
        }
        return false;
    }

    int r_, s_, len_;
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int remaining_ = 0;
    std::chrono::steady_clock::time_point start_;
    std::vector<char> free_;
    std::vector<int> path_;
    std::vector<char> on_path_x_, on_path_y_;
    std::vector<Cycle> out_;
};

inline LabeledSystem generic_system(int t, std::vector<Cycle> cycles, std::string note)
{
    LabeledSystem out;
    CompleteBipartite host;
    for (int z = 0; z < 2 * t; ++z)
        host.part_x.push_back(Vertex::bi(z, 0));
    for (int z = 0; z < 4 * t; ++z)
        host.part_y.push_back(Vertex::bi(z, 1));
    out.vertex_set = host_vertices(host);
    out.system = {std::move(cycles), std::move(host)};
    out.provenance = {Construction::generic, {{"t", t}}};
    out.notes.push_back(std::move(note));
    if (!check_decomposition(out.system).passed)
        throw std::logic_error("generic K_{2t,4t} search produced an invalid system");
    return out;
}

} // namespace detail

struct GenericOptions
{
    bool try_starter = true;
    std::uint64_t starter_nodes = 10'000'000;
    SearchBudget direct_budget{50'000'000, 60.0};
};

/**
 * Some CS(K_{2t,4t}, 2t), t odd > 5. First a Z_{2t}-invariant system from two weaving
 * starter cycles, then direct backtracking. Part X = Bi(z, 0), z < 2t; part Y = Bi(z, 1), z < 4t.
 */
inline LabeledSystem bipartite_generic_2t_4t(int t, const GenericOptions& opt)
{
    if (t < 7 || t % 2 == 0)
        throw InvalidArgument("CS(K_{2t,4t}, 2t) is built for odd t > 5, got " + std::to_string(t));
    const int n = 2 * t;
    if (opt.try_starter) {
        detail::WeavingSearch search(t, opt.starter_nodes);
        if (auto found = search.run()) {
            std::vector<Cycle> cycles;
            for (const auto& base : *found)
                for (int g = 0; g < n; ++g) {
                    std::vector<Vertex> vs;
                    for (const auto& [z, h] : base)
                        vs.push_back(h == 0 ? Vertex::bi(mod(z + g, n), 0) : Vertex::bi(mod(z + g, n) + n * (h - 1), 1));
                    cycles.emplace_back(std::move(vs));
                }
            std::sort(cycles.begin(), cycles.end());
            return detail::generic_system(t, std::move(cycles),
                                          "K_{2t,4t} from weaving starter (" + std::to_string(search.nodes())
                                              + " search nodes)");
        }
    }
    detail::BipartiteBacktrack direct(2 * t, 4 * t, 2 * t, opt.direct_budget);
    if (auto found = direct.run()) {
        std::sort(found->begin(), found->end());
        return detail::generic_system(t, std::move(*found),
                                      "K_{2t,4t} from direct backtracking (" + std::to_string(direct.nodes())
                                          + " search nodes)");
    }
    throw ConstructionError("no CS(K_{" + std::to_string(2 * t) + "," + std::to_string(4 * t) + "}, "
                            + std::to_string(2 * t) + ") found within budget");
}

/// Memoized per t; safe to call concurrently.
inline LabeledSystem bipartite_generic_2t_4t(int t)
{
    static std::shared_mutex lock;
    static std::map<int, LabeledSystem> cache;
    {
        std::shared_lock read(lock);
        if (auto it = cache.find(t); it != cache.end())
            return it->second;
    }
    auto built = bipartite_generic_2t_4t(t, GenericOptions{});
    std::unique_lock write(lock);
    return cache.try_emplace(t, std::move(built)).first->second;
}

} // namespace evenweave

#endif

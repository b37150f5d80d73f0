#ifndef EVENWEAVE_EXACT_COVER_HPP
#define EVENWEAVE_EXACT_COVER_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "evenweave/error.hpp"

namespace evenweave
{

struct SearchBudget
{
    std::uint64_t max_nodes = 100'000'000;
    std::optional<double> max_seconds;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

struct ExactCoverResult
{
    SearchStatus status = SearchStatus::exhausted;
    std::vector<std::size_t> rows;  // indices in insertion order of add_row
    std::uint64_t nodes = 0;
};

/**
 * Algorithm X over a toroidal doubly linked matrix (dancing links).
 * All columns are primary. The column with the fewest remaining candidates
 * is branched on first; ties go to the lowest column index.
 */
class ExactCover
{
public:
    explicit ExactCover(std::size_t columns) : columns_(columns)
    {
        const std::size_t headers = columns + 1;
        left_.resize(headers);
        right_.resize(headers);
        up_.resize(headers);
        down_.resize(headers);
        col_.resize(headers);
        row_.assign(headers, kNone);
        size_.assign(headers, 0);
        for (std::size_t i = 0; i < headers; ++i) {
            left_[i] = i == 0 ? columns : i - 1;
            right_[i] = i == columns ? 0 : i + 1;
            up_[i] = down_[i] = i;
            col_[i] = i;
        }
    }

    std::size_t columns() const { return columns_; }
    std::size_t rows() const { return rows_; }

    /// Columns are 0-based; an empty row can never be part of a cover and is ignored.
    void add_row(std::span<const std::size_t> columns)
    {
        const std::size_t id = rows_++;
        std::size_t first = kNone;
        for (std::size_t c : columns) {
            if (c >= columns_)
                throw InvalidArgument("exact cover column out of range");
            const std::size_t head = c + 1;
            const std::size_t node = left_.size();
            left_.push_back(node);
            right_.push_back(node);
            up_.push_back(up_[head]);
            down_.push_back(head);
            col_.push_back(head);
            row_.push_back(id);
            size_.push_back(0);
            down_[up_[head]] = node;
            up_[head] = node;
            ++size_[head];
            if (first == kNone) {
                first = node;
            } else {
                left_[node] = left_[first];
                right_[node] = first;
                right_[left_[first]] = node;
                left_[first] = node;
            }
        }
    }

    ExactCoverResult solve(const SearchBudget& budget)
    {
        budget_ = budget;
        nodes_ = 0;
        aborted_ = false;
        start_ = std::chrono::steady_clock::now();
        partial_.clear();
        ExactCoverResult result;
        if (columns_ == 0) {
            result.status = SearchStatus::found;
            return result;
        }
        const bool found = search();
        result.nodes = nodes_;
        if (found) {
            result.status = SearchStatus::found;
            for (std::size_t node : partial_)
                result.rows.push_back(row_[node]);
        } else {
            result.status = aborted_ ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
        }
        return result;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    static constexpr std::size_t kRoot = 0;

    void cover(std::size_t c)
    {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (std::size_t i = down_[c]; i != c; i = down_[i])
            for (std::size_t j = right_[i]; j != i; j = right_[j]) {
                down_[up_[j]] = down_[j];
                up_[down_[j]] = up_[j];
                --size_[col_[j]];
            }
    }

    void uncover(std::size_t c)
    {
        for (std::size_t i = up_[c]; i != c; i = up_[i])
            for (std::size_t j = left_[i]; j != i; j = left_[j]) {
                ++size_[col_[j]];
                down_[up_[j]] = j;
                up_[down_[j]] = j;
            }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    bool out_of_budget()
    {
        if (nodes_ > budget_.max_nodes)
            return true;
        if (budget_.max_seconds && (nodes_ & 0xfffu) == 0) {
            const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
            if (spent.count() > *budget_.max_seconds)
                return true;
        }
        return false;
    }

    bool search()
    {
        if (right_[kRoot] == kRoot)
            return true;
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return false;
        }
        std::size_t best = right_[kRoot];
        for (std::size_t c = right_[kRoot]; c != kRoot; c = right_[c])
            if (size_[c] < size_[best])
                best = c;
        if (size_[best] == 0)
            return false;
        cover(best);
        for (std::size_t r = down_[best]; r != best; r = down_[r]) {
            partial_.push_back(r);
            for (std::size_t j = right_[r]; j != r; j = right_[j])
                cover(col_[j]);
            const bool found = search();
            for (std::size_t j = left_[r]; j != r; j = left_[j])
                uncover(col_[j]);
            if (found) {
                uncover(best);
                return true;
            }
            partial_.pop_back();
            if (aborted_)
                break;
        }
        uncover(best);
        return false;
    }

    std::size_t columns_;
    std::size_t rows_ = 0;
    std::vector<std::size_t> left_, right_, up_, down_, col_, row_, size_;

    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::size_t> partial_;
};

} // namespace evenweave

#endif

#pragma once

// Rank-space predecessor/successor and range-minimum structures used by
// the query path. Both work over small static arrays (one entry per MUPS),
// so plain binary search and a sparse table are the right tools; the
// fancier integer dictionaries would only change constants here.
// Ranks are 1-based throughout, matching run and position indexing.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rle_string.hpp"

namespace sups {

class SortedPositions {
public:
    SortedPositions() = default;

    explicit SortedPositions(std::vector<pos_type> values) : values_(std::move(values)) {
#ifndef NDEBUG
        for (std::size_t i = 1; i < values_.size(); ++i) assert(values_[i - 1] < values_[i]);
#endif
    }

    std::size_t size() const { return values_.size(); }

    pos_type value(std::size_t rank) const {
        if (rank < 1 || rank > values_.size())
            throw std::out_of_range("sorted positions: rank out of range");
        return values_[rank - 1];
    }

    // Rank of the largest value <= k; 0 when every value exceeds k.
    std::size_t pred(pos_type k) const {
        return static_cast<std::size_t>(
            std::upper_bound(values_.begin(), values_.end(), k) - values_.begin());
    }

    // Rank of the smallest value >= k; size() + 1 when all values are below k.
    std::size_t succ(pos_type k) const {
        return static_cast<std::size_t>(
            std::lower_bound(values_.begin(), values_.end(), k) - values_.begin()) + 1;
    }

    std::size_t memory_bytes() const { return values_.size() * sizeof(pos_type); }

private:
    std::vector<pos_type> values_;  // strictly increasing
};

// Static range minimum with leftmost tie-break, O(d log d) table.
class SparseRmq {
public:
    SparseRmq() = default;

    explicit SparseRmq(std::vector<len_type> values) : values_(std::move(values)) {
        const std::size_t d = values_.size();
        if (d == 0) return;
        const int levels = std::bit_width(d);
        table_.assign(static_cast<std::size_t>(levels), std::vector<std::uint32_t>(d));
        for (std::size_t i = 0; i < d; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
        for (int k = 1; k < levels; ++k) {
            const std::size_t half = std::size_t{1} << (k - 1);
            for (std::size_t i = 0; i + 2 * half <= d; ++i)
                table_[k][i] = pick(table_[k - 1][i], table_[k - 1][i + half]);
        }
    }

    std::size_t size() const { return values_.size(); }

    len_type value(std::size_t rank) const {
        if (rank < 1 || rank > values_.size())
            throw std::out_of_range("rmq: rank out of range");
        return values_[rank - 1];
    }

    // Rank of the leftmost minimum on [lo, hi], both inclusive and 1-based.
    std::size_t argmin(std::size_t lo, std::size_t hi) const {
        if (lo < 1 || hi > values_.size() || lo > hi)
            throw std::out_of_range("rmq: bad range");
        const std::size_t i = lo - 1, j = hi - 1;
        const int k = std::bit_width(j - i + 1) - 1;
        const std::size_t half = std::size_t{1} << k;
        return pick(table_[static_cast<std::size_t>(k)][i],
                    table_[static_cast<std::size_t>(k)][j + 1 - half]) + 1;
    }

    // Minimum value and the ranks of all positions attaining it, left to
    // right. Costs one probe per reported rank. Empty range allowed.
    std::pair<len_type, std::vector<std::size_t>> range_min_all(std::size_t lo,
                                                                std::size_t hi) const {
        std::pair<len_type, std::vector<std::size_t>> out{0, {}};
        if (lo > hi) return out;
        std::size_t r = argmin(lo, hi);
        out.first = values_[r - 1];
        out.second.push_back(r);
        while (r < hi) {
            const std::size_t next = argmin(r + 1, hi);
            if (values_[next - 1] != out.first) break;
            out.second.push_back(next);
            r = next;
        }
        return out;
    }

    std::size_t memory_bytes() const {
        std::size_t total = values_.size() * sizeof(len_type);
        for (const auto& level : table_) total += level.size() * sizeof(std::uint32_t);
        return total;
    }

private:
    // Left argument wins ties, so minima resolve to the leftmost index.
    std::uint32_t pick(std::uint32_t a, std::uint32_t b) const {
        return values_[b] < values_[a] ? b : a;
    }

    std::vector<len_type> values_;
    std::vector<std::vector<std::uint32_t>> table_;  // table_[k][i]: argmin of [i, i + 2^k)
};

}  // namespace sups

#pragma once

// Shortest unique palindromic substring queries over RLE text.
//
// The index keeps the run table, the longest-palindrome length per run
// center, the MUPS arrays, predecessor/successor over MUPS endpoints and a
// range-minimum table over MUPS lengths: O(m) words total, independent of
// the decompressed length. The eertree exists only during construction.
//
// A query [s, t] looks at how many MUPSs lie inside the interval. Two or
// more: no unique palindrome can cover both (covering palindromes of one
// mirror a second occurrence of the other). Exactly one: the only possible
// answer is that MUPS padded equally out to the interval, valid if a
// palindrome that long exists at its center. None: the nearest MUPS ending
// left of t extended to reach t, the nearest starting right of s extended
// to reach s, and the shortest MUPSs strictly between them compete; the
// shortest surviving candidates win.
//
// Everything is immutable after build, so concurrent queries are safe.

#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "interval_index.hpp"
#include "mups.hpp"
#include "rle_eertree.hpp"
#include "rle_manacher.hpp"
#include "rle_string.hpp"

namespace sups {

struct Interval {
    pos_type beg = 0;
    pos_type end = 0;

    len_type length() const { return end - beg + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct BuildStats {
    std::size_t eertree_nodes = 0;          // palindrome nodes, sentinel excluded
    std::size_t eertree_bounded_nodes = 0;  // of those, run-boundary bounded
    std::size_t mups_count = 0;
};

template <std::totally_ordered Sym = char>
class SupsIndex {
public:
    SupsIndex() = default;

    static SupsIndex build(RleString<Sym> rle, MupsOptions opts = {},
                           BuildStats* stats = nullptr) {
        SupsIndex idx;
        idx.rle_ = std::move(rle);
        idx.pal_ = MaxPalTable(idx.rle_);
        {
            RleEertree<Sym> tree = RleEertree<Sym>::build(idx.rle_, idx.pal_);
            idx.mups_ = extract_mups(tree, idx.rle_, opts);
            if (stats) {
                stats->eertree_nodes = tree.palindrome_node_count();
                stats->eertree_bounded_nodes = tree.bounded_node_count();
                stats->mups_count = idx.mups_.size();
            }
        }
        idx.beg_pos_ = SortedPositions(idx.mups_.beg);
        idx.end_pos_ = SortedPositions(idx.mups_.end);
        idx.len_rmq_ = SparseRmq(idx.mups_.len);
        return idx;
    }

    const RleString<Sym>& rle() const { return rle_; }
    const MupsList& mups() const { return mups_; }
    const MaxPalTable& max_palindromes() const { return pal_; }

    // Whether [beg, end] is a palindrome of the text, for intervals whose
    // center coincides with the center of the given run. Such an interval
    // is palindromic iff it fits inside the longest palindrome there.
    bool is_run_centered_palindrome(run_index center, pos_type beg, pos_type end) const {
        if (beg < 1 || end > rle_.length() || beg > end)
            throw std::out_of_range("sups: interval out of range");
        if (beg + end != rle_.run_center_doubled(center))  // also validates center
            throw std::logic_error("sups: interval is not centered on the run center");
        return end - beg + 1 <= pal_.max_length(center);
    }

    std::vector<Interval> query(pos_type s, pos_type t) const {
        std::vector<Interval> out;
        query_into(s, t, out);
        return out;
    }

    // Shortest unique palindromic substrings covering [s, t]: all of equal
    // minimal length, sorted by begin position; empty when none exists.
    void query_into(pos_type s, pos_type t, std::vector<Interval>& out) const {
        out.clear();
        if (s < 1 || t > rle_.length() || s > t)
            throw std::out_of_range("sups: query interval out of range");

        const std::size_t d = mups_.size();
        const std::size_t q = beg_pos_.succ(s);  // leftmost MUPS starting at or after s
        const std::size_t p = end_pos_.pred(t);  // rightmost MUPS ending at or before t
        const std::size_t contained = p >= q ? p - q + 1 : 0;
        if (contained >= 2) return;  // each would recur in any covering palindrome

        if (contained == 1) {
            const pos_type i = mups_.beg[q - 1], j = mups_.end[q - 1];
            const len_type z = std::max(i - s, t - j);
            if (candidate_length(q, z) != kInf)
                out.push_back(Interval{i - z, j + z});
            return;
        }

        // No MUPS inside. Candidates: p padded right out to t, q padded
        // left out to s, and the shortest MUPSs with ranks in (p, q).
        len_type left_len = kInf, right_len = kInf;
        Interval left{}, right{};
        if (p >= 1) {
            const len_type z = t - mups_.end[p - 1];
            left_len = candidate_length(p, z);
            if (left_len != kInf) left = Interval{mups_.beg[p - 1] - z, t};
        }
        if (q <= d) {
            const len_type z = mups_.beg[q - 1] - s;
            right_len = candidate_length(q, z);
            if (right_len != kInf) right = Interval{s, mups_.end[q - 1] + z};
        }
        len_type best = std::min(left_len, right_len);
        len_type mid_len = kInf;
        if (p + 2 <= q) {
            mid_len = len_rmq_.value(len_rmq_.argmin(p + 1, q - 1));
            best = std::min(best, mid_len);
        }
        if (best == kInf) return;

        // Begin positions increase from left over the middles to right.
        if (left_len == best) out.push_back(left);
        if (mid_len == best) {
            const auto [val, ranks] = len_rmq_.range_min_all(p + 1, q - 1);
            assert(val == best);
            for (const std::size_t r : ranks)
                out.push_back(Interval{mups_.beg[r - 1], mups_.end[r - 1]});
        }
        if (right_len == best) out.push_back(right);
        assert(std::is_sorted(out.begin(), out.end(),
                              [](const Interval& a, const Interval& b) { return a.beg < b.beg; }));
    }

    std::size_t memory_bytes() const {
        return rle_.memory_bytes() + pal_.memory_bytes() + mups_.memory_bytes() +
               beg_pos_.memory_bytes() + end_pos_.memory_bytes() + len_rmq_.memory_bytes();
    }

private:
    static constexpr len_type kInf = std::numeric_limits<len_type>::max();

    // Length of MUPS rank padded by z on both sides, or kInf when no
    // palindrome that long sits at its center. Guarded against the
    // padded length itself overflowing for extreme n.
    len_type candidate_length(std::size_t rank, len_type z) const {
        const len_type base = mups_.len[rank - 1];
        if (z > (kInf - base) / 2) return kInf;
        const len_type cand = base + 2 * z;
        return cand <= pal_.max_length(mups_.center_run[rank - 1]) ? cand : kInf;
    }

    RleString<Sym> rle_;
    MaxPalTable pal_;
    MupsList mups_;
    SortedPositions beg_pos_;
    SortedPositions end_pos_;
    SparseRmq len_rmq_;
};

}  // namespace sups

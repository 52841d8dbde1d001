#pragma once

// Longest run-centered palindromes, computed over the run sequence.
//
// Manacher's algorithm runs on the runs themselves with (symbol, exponent)
// pair equality. Because adjacent runs never share a symbol, no palindrome
// of runs has even length, so only the m odd centers exist. The per-run
// radius is then widened by one partial run on each side when the two
// flanking runs carry the same symbol; the result is, for every run j, the
// length of the longest palindrome of the text centered at the center of
// run j.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "rle_string.hpp"

namespace sups {

// Radii in whole runs: radius r at run j means runs j-r..j+r form a
// palindrome of runs. Linear time by the usual mirror argument.
template <std::totally_ordered Sym>
std::vector<std::uint32_t> run_palindrome_radii(const RleString<Sym>& rle) {
    const auto runs = rle.runs();
    const std::size_t m = runs.size();
    std::vector<std::uint32_t> radius(m, 0);
    std::size_t c = 0;  // center of the palindrome reaching furthest right
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t r = 0;
        if (j > c && j < c + radius[c]) {
            const std::size_t mirror = 2 * c - j;
            r = std::min<std::size_t>(radius[mirror], c + radius[c] - j);
        }
        while (j >= r + 1 && j + r + 1 < m && runs[j - r - 1] == runs[j + r + 1]) ++r;
        radius[j] = static_cast<std::uint32_t>(r);
        if (j + r > c + radius[c]) c = j;
    }
    return radius;
}

// Character length of the longest text palindrome centered at each run's
// center: the full runs within the radius, plus min(e_left, e_right)
// characters on both sides when the flanking runs share a symbol.
template <std::totally_ordered Sym>
std::vector<len_type> extend_to_maximal(const RleString<Sym>& rle,
                                        std::span<const std::uint32_t> radius) {
    const auto runs = rle.runs();
    const std::size_t m = runs.size();
    assert(radius.size() == m);
    std::vector<len_type> max_len(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = j - radius[j];
        const std::size_t k = j + radius[j];
        len_type len = rle.run_end(k + 1) - rle.run_begin(i + 1) + 1;
        if (i >= 1 && k + 2 <= m && runs[i - 1].symbol == runs[k + 1].symbol)
            len += 2 * std::min(runs[i - 1].exponent, runs[k + 1].exponent);
        max_len[j] = len;
    }
    return max_len;
}

// Both tables, with 1-based run accessors.
class MaxPalTable {
public:
    MaxPalTable() = default;

    template <std::totally_ordered Sym>
    explicit MaxPalTable(const RleString<Sym>& rle)
        : radius_(run_palindrome_radii(rle)),
          max_len_(extend_to_maximal(rle, radius_)) {}

    std::size_t run_count() const { return radius_.size(); }

    std::uint32_t radius(run_index j) const {
        if (j < 1 || j > radius_.size())
            throw std::out_of_range("max pal table: run index out of range");
        return radius_[j - 1];
    }

    len_type max_length(run_index j) const {
        if (j < 1 || j > max_len_.size())
            throw std::out_of_range("max pal table: run index out of range");
        return max_len_[j - 1];
    }

    std::span<const len_type> max_lengths() const { return max_len_; }

    std::size_t memory_bytes() const {
        return radius_.size() * sizeof(std::uint32_t) + max_len_.size() * sizeof(len_type);
    }

private:
    std::vector<std::uint32_t> radius_;
    std::vector<len_type> max_len_;
};

}  // namespace sups

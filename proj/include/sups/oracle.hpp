#pragma once

// Brute-force reference for palindrome queries on plain strings.
//
// Everything in here works from the definitions alone: a quadratic
// palindrome table, occurrence counts obtained by enumerating intervals,
// and linear scans per query. Deliberately no sharing with the indexed
// implementation; this is the ground truth the fast path is checked
// against, at desk scale (n up to a few hundred).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rle_string.hpp"

namespace sups::oracle {

struct Interval {
    pos_type beg = 0;
    pos_type end = 0;

    len_type length() const { return end - beg + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

inline bool is_palindrome(std::string_view s) {
    for (std::size_t i = 0, j = s.size(); i + 1 <= j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

// Occurrences of x in text, one comparison at a time.
inline std::uint64_t occurrences(std::string_view text, std::string_view x) {
    if (x.empty() || x.size() > text.size()) return 0;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + x.size() <= text.size(); ++i)
        if (text.compare(i, x.size(), x) == 0) ++count;
    return count;
}

class Analysis {
public:
    explicit Analysis(std::string text) : text_(std::move(text)) {
        const std::size_t n = text_.size();
        pal_.assign(n, std::vector<bool>(n, false));
        for (std::size_t len = 1; len <= n; ++len) {
            for (std::size_t i = 0; i + len <= n; ++i) {
                const std::size_t j = i + len - 1;
                pal_[i][j] = text_[i] == text_[j] && (len <= 2 || pal_[i + 1][j - 1]);
            }
        }
        // Occurrences of a palindrome are exactly the palindromic intervals
        // holding its content, so one pass over intervals tallies them all.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (pal_[i][j]) ++occ_[text_.substr(i, j - i + 1)];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (pal_[i][j] && occ_.at(text_.substr(i, j - i + 1)) == 1)
                    unique_pals_.push_back(Interval{i + 1, j + 1});
    }

    pos_type length() const { return text_.size(); }
    const std::string& text() const { return text_; }

    // Palindromic substrings occurring exactly once, as intervals sorted by
    // begin position.
    const std::vector<Interval>& unique_palindromes() const { return unique_pals_; }

    std::uint64_t occurrences_of(std::string_view x) const {
        auto it = occ_.find(std::string(x));
        return it == occ_.end() ? occurrences(text_, x) : it->second;
    }

    // Minimal unique palindromic substrings: unique palindromes whose
    // one-step shrink is no longer unique (or which cannot shrink).
    std::vector<Interval> mups() const {
        std::vector<Interval> out;
        for (const Interval& iv : unique_pals_) {
            if (iv.length() <= 2) {
                out.push_back(iv);
                continue;
            }
            std::string inner = text_.substr(static_cast<std::size_t>(iv.beg),
                                             static_cast<std::size_t>(iv.length() - 2));
            if (occ_.at(inner) >= 2) out.push_back(iv);
        }
        return out;
    }

    // Shortest unique palindromic substrings covering [s, t]: among unique
    // palindromes that contain the interval, all of minimal length.
    std::vector<Interval> sups(pos_type s, pos_type t) const {
        if (s < 1 || t > length() || s > t)
            throw std::out_of_range("oracle: query interval out of range");
        len_type best = 0;
        std::vector<Interval> out;
        for (const Interval& iv : unique_pals_) {
            if (iv.beg > s || iv.end < t) continue;
            if (out.empty() || iv.length() < best) {
                best = iv.length();
                out.clear();
            }
            if (iv.length() == best) out.push_back(iv);
        }
        return out;
    }

    // For every maximal run of equal characters, the length of the longest
    // palindrome centered at the run's center, found by plain expansion.
    std::vector<len_type> run_centered_max_len() const {
        std::vector<len_type> out;
        const std::size_t n = text_.size();
        std::size_t b = 0;
        while (b < n) {
            std::size_t e = b;
            while (e + 1 < n && text_[e + 1] == text_[b]) ++e;
            std::size_t lo = b, hi = e;
            while (lo > 0 && hi + 1 < n && text_[lo - 1] == text_[hi + 1]) --lo, ++hi;
            out.push_back(hi - lo + 1);
            b = e + 1;
        }
        return out;
    }

    // Distinct palindromic substrings including the empty one.
    std::uint64_t distinct_palindrome_count() const { return occ_.size() + 1; }

private:
    std::string text_;
    std::vector<std::vector<bool>> pal_;      // pal_[i][j]: text_[i..j] is a palindrome
    std::map<std::string, std::uint64_t> occ_;  // per palindromic substring
    std::vector<Interval> unique_pals_;
};

inline std::vector<Interval> mups(std::string_view text) {
    return Analysis(std::string(text)).mups();
}

inline std::vector<Interval> sups(std::string_view text, pos_type s, pos_type t) {
    return Analysis(std::string(text)).sups(s, t);
}

inline std::vector<len_type> run_centered_max_len(std::string_view text) {
    return Analysis(std::string(text)).run_centered_max_len();
}

}  // namespace sups::oracle

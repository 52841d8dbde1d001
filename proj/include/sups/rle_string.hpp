#pragma once

// Run-length encoded string with prefix-sum position tables.
// This is the only representation of the text the index ever holds:
// positions are 1-based and 64-bit, so exponents around 1e9 with
// 1e5 runs stay exact without ever materializing the plain string.

#include <concepts>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sups {

using pos_type = std::uint64_t;   // 1-based position in the decompressed text
using len_type = std::uint64_t;   // length in decompressed characters
using exp_type = std::uint64_t;   // run exponent
using run_index = std::size_t;    // 1-based run index

template <std::totally_ordered Sym = char>
struct Run {
    Sym symbol{};
    exp_type exponent = 0;

    friend bool operator==(const Run&, const Run&) = default;
    // Pair order: by symbol, then by exponent.
    friend auto operator<=>(const Run& a, const Run& b) {
        if (auto c = a.symbol <=> b.symbol; c != 0) return c;
        return a.exponent <=> b.exponent;
    }
};

template <std::totally_ordered Sym = char>
class RleString {
public:
    RleString() = default;

    // Strict construction: exponents must be >= 1 and adjacent runs must
    // carry distinct symbols. Inputs that merely "could be merged" are
    // rejected so that every consumer can rely on canonical form.
    explicit RleString(std::vector<Run<Sym>> runs) : runs_(std::move(runs)) {
        run_ends_.reserve(runs_.size());
        pos_type total = 0;
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            const Run<Sym>& r = runs_[i];
            if (r.exponent == 0)
                throw std::invalid_argument("rle: run exponent must be positive (run " +
                                            std::to_string(i + 1) + ")");
            if (i > 0 && runs_[i - 1].symbol == r.symbol)
                throw std::invalid_argument("rle: adjacent runs share a symbol (run " +
                                            std::to_string(i + 1) + ")");
            if (r.exponent > std::numeric_limits<pos_type>::max() - total)
                throw std::invalid_argument("rle: total length overflows 64 bits");
            total += r.exponent;
            run_ends_.push_back(total);
        }
    }

    std::size_t run_count() const { return runs_.size(); }              // m
    pos_type length() const { return run_ends_.empty() ? 0 : run_ends_.back(); }  // n
    bool empty() const { return runs_.empty(); }

    const Run<Sym>& run(run_index j) const {
        check_run(j);
        return runs_[j - 1];
    }

    // rlebp(j): first text position covered by run j.
    pos_type run_begin(run_index j) const {
        check_run(j);
        return j == 1 ? 1 : run_ends_[j - 2] + 1;
    }

    // rleep(j): last text position covered by run j.
    pos_type run_end(run_index j) const {
        check_run(j);
        return run_ends_[j - 1];
    }

    // Twice the center of run j. Centers can sit between characters, so
    // they are kept doubled to stay in integer arithmetic.
    pos_type run_center_doubled(run_index j) const {
        return run_begin(j) + run_end(j);
    }

    // The unique j with run_begin(j) <= p <= run_end(j).
    run_index run_of_position(pos_type p) const {
        if (p < 1 || p > length())
            throw std::out_of_range("rle: position out of range");
        auto it = std::lower_bound(run_ends_.begin(), run_ends_.end(), p);
        return static_cast<run_index>(it - run_ends_.begin()) + 1;
    }

    // sigma_RLE: number of distinct (symbol, exponent) pairs.
    std::size_t distinct_run_count() const {
        std::set<Run<Sym>> seen(runs_.begin(), runs_.end());
        return seen.size();
    }

    std::span<const Run<Sym>> runs() const { return runs_; }
    std::span<const pos_type> run_ends() const { return run_ends_; }

    // Desk-scale only; the index itself never decompresses.
    std::vector<Sym> decode() const {
        std::vector<Sym> out;
        out.reserve(static_cast<std::size_t>(length()));
        for (const Run<Sym>& r : runs_)
            out.insert(out.end(), static_cast<std::size_t>(r.exponent), r.symbol);
        return out;
    }

    std::size_t memory_bytes() const {
        return runs_.size() * sizeof(Run<Sym>) + run_ends_.size() * sizeof(pos_type);
    }

    friend bool operator==(const RleString&, const RleString&) = default;

private:
    void check_run(run_index j) const {
        if (j < 1 || j > runs_.size())
            throw std::out_of_range("rle: run index out of range");
    }

    std::vector<Run<Sym>> runs_;
    std::vector<pos_type> run_ends_;  // cumulative end positions, strictly increasing
};

template <std::totally_ordered Sym>
RleString<Sym> encode_plain(std::span<const Sym> text) {
    std::vector<Run<Sym>> runs;
    for (const Sym& s : text) {
        if (!runs.empty() && runs.back().symbol == s)
            ++runs.back().exponent;
        else
            runs.push_back(Run<Sym>{s, 1});
    }
    return RleString<Sym>(std::move(runs));
}

inline RleString<char> encode_plain(std::string_view text) {
    return encode_plain(std::span<const char>(text.data(), text.size()));
}

inline std::string to_plain_string(const RleString<char>& rle) {
    std::vector<char> chars = rle.decode();
    return std::string(chars.begin(), chars.end());
}

}  // namespace sups

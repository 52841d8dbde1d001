#pragma once

// Minimal unique palindromic substrings (MUPSs), extracted from the run
// eertree. A MUPS is a palindromic substring occurring exactly once whose
// one-step shrink occurs at least twice. Every MUPS is centered at some
// run's center and no two share a run, so the result is a set of at most m
// non-nesting intervals, kept as parallel arrays sorted by position.

#include <cassert>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "rle_eertree.hpp"
#include "rle_string.hpp"

namespace sups {

struct MupsOptions {
    // A candidate a^1 P a^1 built by wrapping a palindrome P with single
    // characters is minimal only when P itself repeats in the text;
    // otherwise shrinking once more still yields a unique palindrome.
    // Off switch exists so the verification harness can demonstrate the
    // check is load-bearing. Leave it on.
    bool require_core_repeat = true;
};

struct MupsCandidate {
    pos_type beg = 0;
    pos_type end = 0;
    run_index center_run = 0;
};

struct MupsList {
    std::vector<pos_type> beg;
    std::vector<pos_type> end;
    std::vector<len_type> len;
    std::vector<run_index> center_run;

    std::size_t size() const { return beg.size(); }
    bool empty() const { return beg.empty(); }

    std::size_t memory_bytes() const {
        return beg.size() * sizeof(pos_type) + end.size() * sizeof(pos_type) +
               len.size() * sizeof(len_type) + center_run.size() * sizeof(run_index);
    }

    // One MUPS per line: beg end len center_run. Test and debug helper.
    void dump(std::ostream& os) const {
        for (std::size_t i = 0; i < size(); ++i)
            os << beg[i] << ' ' << end[i] << ' ' << len[i] << ' ' << center_run[i] << '\n';
    }
};

// Single-run MUPSs: a^e is one exactly when e is the strictly largest
// exponent among a-runs, attained once. (Unique: any longer a-block would
// contain a^e twice or more. Minimal: a^(e-1) appears in every a^f with
// f = e-1 or f = e, and some second a-run exists unless m = 1, where
// a^(e-1) occurs twice inside a^e as well.)
template <std::totally_ordered Sym>
std::vector<MupsCandidate> single_run_mups(const RleString<Sym>& rle) {
    struct Best {
        exp_type emax = 0;
        std::size_t hits = 0;
        run_index where = 0;
    };
    std::map<Sym, Best> best;
    for (run_index j = 1; j <= rle.run_count(); ++j) {
        const Run<Sym>& r = rle.run(j);
        Best& b = best[r.symbol];
        if (r.exponent > b.emax) {
            b = Best{r.exponent, 1, j};
        } else if (r.exponent == b.emax) {
            ++b.hits;
        }
    }
    std::vector<MupsCandidate> out;
    for (const auto& [sym, b] : best)
        if (b.hits == 1)
            out.push_back(MupsCandidate{rle.run_begin(b.where), rle.run_end(b.where), b.where});
    return out;
}

// Composite MUPSs a^h P a^h with P a nonempty palindrome. For each node P
// and flank symbol a, let emax be the largest flank exponent among P's
// children labeled a and esecond the second largest. The emax child's
// count is the total occurrence count of a^emax P a^emax; if that is 1,
// the candidate trims the emax child's sample occurrence down to flank
// esecond + 1 (or to a single character when no esecond exists, in which
// case P must occur at least twice for the shrink to be non-unique).
template <std::totally_ordered Sym>
std::vector<MupsCandidate> composite_mups(const RleEertree<Sym>& tree,
                                          const RleString<Sym>& rle,
                                          const MupsOptions& opts = {}) {
    std::vector<MupsCandidate> out;
    for (std::uint32_t id = RleEertree<Sym>::kRootEmpty + 1; id < tree.node_count(); ++id) {
        const auto& edges = tree.node(id).edges;
        std::size_t a = 0;
        while (a < edges.size()) {
            std::size_t b = a;
            while (b + 1 < edges.size() &&
                   edges[b + 1].first.symbol == edges[a].first.symbol)
                ++b;
            // edges[a..b]: same flank symbol, exponents ascending
            const std::uint32_t top = edges[b].second;
            if (tree.node(top).count == 1) {
                bool keep = true;
                exp_type delta = 0;
                if (b > a) {
                    delta = edges[b].first.exponent - edges[b - 1].first.exponent - 1;
                } else if (!opts.require_core_repeat || tree.substring_occurrences(id) >= 2) {
                    delta = edges[b].first.exponent - 1;
                } else {
                    keep = false;
                }
                if (keep) {
                    const auto& node = tree.node(top);
                    const pos_type center2 = rle.run_center_doubled(node.sample_center_run);
                    const pos_type occ_beg = (center2 - node.char_len + 1) / 2;
                    const pos_type occ_end = (center2 + node.char_len - 1) / 2;
                    out.push_back(MupsCandidate{occ_beg + delta, occ_end - delta,
                                                node.sample_center_run});
                }
            }
            a = b + 1;
        }
    }
    return out;
}

// Buckets candidates by center run and reads them off left to right.
// Two candidates on one run mean an upstream bug, not bad input.
template <std::totally_ordered Sym>
MupsList assemble_sorted(const std::vector<MupsCandidate>& candidates,
                         const RleString<Sym>& rle) {
    constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
    std::vector<std::size_t> slot(rle.run_count() + 1, kEmpty);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const run_index c = candidates[i].center_run;
        assert(c >= 1 && c <= rle.run_count());
        if (slot[c] != kEmpty)
            throw std::logic_error("mups: two minimal palindromes share a center run");
        slot[c] = i;
    }
    MupsList out;
    out.beg.reserve(candidates.size());
    out.end.reserve(candidates.size());
    out.len.reserve(candidates.size());
    out.center_run.reserve(candidates.size());
    for (run_index j = 1; j <= rle.run_count(); ++j) {
        if (slot[j] == kEmpty) continue;
        const MupsCandidate& c = candidates[slot[j]];
        assert(out.beg.empty() || (out.beg.back() < c.beg && out.end.back() < c.end));
        out.beg.push_back(c.beg);
        out.end.push_back(c.end);
        out.len.push_back(c.end - c.beg + 1);
        out.center_run.push_back(j);
    }
    return out;
}

template <std::totally_ordered Sym>
MupsList extract_mups(const RleEertree<Sym>& tree, const RleString<Sym>& rle,
                      const MupsOptions& opts = {}) {
    std::vector<MupsCandidate> all = single_run_mups(rle);
    std::vector<MupsCandidate> comp = composite_mups(tree, rle, opts);
    all.insert(all.end(), comp.begin(), comp.end());
    return assemble_sorted(all, rle);
}

}  // namespace sups

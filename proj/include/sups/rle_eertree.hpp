#pragma once

// Palindromic tree (eertree) built over the run sequence.
//
// Symbols of the tree are whole runs, compared as (symbol, exponent)
// pairs. Adjacent runs differ, so only odd-length palindromes of runs
// occur and the even root never gains children; it is kept as the usual
// length -1 sentinel. Construction has two phases:
//
//   1. online insertion of runs, which enumerates every palindrome whose
//      occurrences start and end exactly on run boundaries, counting one
//      occurrence per position via suffix-link propagation;
//   2. one pass over centers that grafts, for each run l whose widest
//      run-palindrome Q_l has matching flanking symbols, the palindrome
//      obtained by extending Q_l with min(e_left, e_right) characters on
//      both sides. Nodes added here cannot be extended on either side.
//
// Node ids are dense; ids 0 and 1 are the two roots. The length -1
// sentinel represents no substring and is excluded from size accounting.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "rle_manacher.hpp"
#include "rle_string.hpp"

namespace sups {

template <std::totally_ordered Sym = char>
class RleEertree {
public:
    static constexpr std::uint32_t kNoNode = 0xFFFFFFFFu;
    static constexpr std::uint32_t kRootNeg = 0;    // length -1 sentinel
    static constexpr std::uint32_t kRootEmpty = 1;  // empty palindrome

    struct Node {
        len_type char_len = 0;     // length in text characters
        std::int64_t run_len = 0;  // length in runs (odd for real nodes)
        std::uint32_t parent = kNoNode;
        std::uint32_t suffix_link = kNoNode;
        Run<Sym> in_label{};            // label of the edge from parent
        std::uint64_t count = 0;        // occurrences recorded by the two phases
        run_index sample_center_run = 0;  // center run of the recording occurrence
        bool rle_bounded = false;       // has an occurrence aligned to run boundaries
        bool maximal = false;           // had a two-sided-maximal occurrence recorded
        std::map<Run<Sym>, std::uint32_t> edge_map;             // construction only
        std::vector<std::pair<Run<Sym>, std::uint32_t>> edges;  // sorted, after finalize
    };

    static RleEertree build(const RleString<Sym>& rle, const MaxPalTable& pal) {
        RleEertree t = build_bounded(rle);
        t.propagate_counts();
        t.add_maximal(rle, pal);
        t.finalize(rle);
        return t;
    }

    // Phase 1. After this, every node is run-boundary bounded and count
    // holds the number of positions whose longest such suffix it is.
    static RleEertree build_bounded(const RleString<Sym>& rle) {
        RleEertree t;
        const std::size_t m = rle.run_count();
        t.nodes_.reserve(2 * m + 2);
        t.nodes_.emplace_back();  // kRootNeg
        t.nodes_[kRootNeg].run_len = -1;
        t.nodes_[kRootNeg].suffix_link = kRootNeg;
        t.nodes_.emplace_back();  // kRootEmpty
        t.nodes_[kRootEmpty].run_len = 0;
        t.nodes_[kRootEmpty].suffix_link = kRootNeg;
        t.pos_longest_.assign(m + 1, kRootEmpty);

        std::uint32_t last = kRootEmpty;
        for (run_index j = 1; j <= m; ++j) {
            const Run<Sym> c = rle.run(j);
            const std::uint32_t x = t.extend_from(last, j, rle);
            std::uint32_t child = t.find_child(x, c);
            if (child == kNoNode) {
                std::uint32_t link;
                if (t.nodes_[x].run_len + 2 == 1) {
                    link = kRootEmpty;
                } else {
                    const std::uint32_t y =
                        t.extend_from(t.nodes_[x].suffix_link, j, rle);
                    link = t.find_child(y, c);
                    if (link == kNoNode)
                        throw std::logic_error("rle eertree: missing suffix-link target");
                }
                child = static_cast<std::uint32_t>(t.nodes_.size());
                Node v;
                v.run_len = t.nodes_[x].run_len + 2;
                v.char_len = x == kRootNeg ? c.exponent
                                           : t.nodes_[x].char_len + 2 * c.exponent;
                v.parent = x;
                v.suffix_link = link;
                v.in_label = c;
                v.rle_bounded = true;
                v.sample_center_run = j - static_cast<run_index>((v.run_len - 1) / 2);
                t.nodes_.push_back(std::move(v));
                t.nodes_[x].edge_map.emplace(c, child);
            }
            last = child;
            ++t.nodes_[last].count;
            t.pos_longest_[j] = last;
        }
        return t;
    }

    // Phase 1 counting: a palindrome occurs wherever any palindrome having
    // it as suffix occurs, so counts flow down the suffix-link chains.
    // Longer nodes first; links always strictly shrink run_len.
    void propagate_counts() {
        std::vector<std::uint32_t> order;
        order.reserve(nodes_.size());
        for (std::uint32_t v = kRootEmpty + 1; v < nodes_.size(); ++v) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return nodes_[a].run_len > nodes_[b].run_len;
        });
        for (std::uint32_t v : order) {
            const std::uint32_t link = nodes_[v].suffix_link;
            if (link > kRootEmpty) nodes_[link].count += nodes_[v].count;
        }
    }

    // Phase 2. Q_l (the widest run-palindrome centered at run l) is located
    // on the suffix-link chain of the longest bounded suffix at run l+r via
    // binary lifting, then extended by one partial run on each side.
    void add_maximal(const RleString<Sym>& rle, const MaxPalTable& pal) {
        const std::size_t m = rle.run_count();
        if (m == 0) return;

        const std::size_t base = nodes_.size();
        const int levels = std::bit_width(base);
        std::vector<std::vector<std::uint32_t>> up(
            static_cast<std::size_t>(levels), std::vector<std::uint32_t>(base));
        for (std::uint32_t v = 0; v < base; ++v)
            up[0][v] = v <= kRootEmpty ? kRootNeg : nodes_[v].suffix_link;
        for (int k = 1; k < levels; ++k)
            for (std::uint32_t v = 0; v < base; ++v) up[k][v] = up[k - 1][up[k - 1][v]];

        const auto ancestor_with_run_len = [&](std::uint32_t v, std::int64_t target) {
            for (int k = levels - 1; k >= 0; --k)
                if (nodes_[up[k][v]].run_len >= target) v = up[k][v];
            if (nodes_[v].run_len != target)
                throw std::logic_error("rle eertree: center palindrome not on suffix chain");
            return v;
        };

        for (run_index l = 1; l <= m; ++l) {
            const std::uint32_t r = pal.radius(l);
            const run_index i = l - r;
            const run_index k = l + r;
            if (i == 1 || k == m) continue;  // extension runs over a text boundary
            const Run<Sym>& left = rle.run(i - 1);
            const Run<Sym>& right = rle.run(k + 1);
            if (left.symbol != right.symbol) continue;
            const Run<Sym> label{left.symbol, std::min(left.exponent, right.exponent)};

            const std::uint32_t u =
                ancestor_with_run_len(pos_longest_[k], 2 * static_cast<std::int64_t>(r) + 1);
            std::uint32_t child = find_child(u, label);
            if (child != kNoNode) {
                ++nodes_[child].count;
                nodes_[child].maximal = true;
            } else {
                child = static_cast<std::uint32_t>(nodes_.size());
                Node w;
                w.run_len = nodes_[u].run_len + 2;
                w.char_len = nodes_[u].char_len + 2 * label.exponent;
                w.parent = u;
                w.in_label = label;
                w.count = 1;
                w.sample_center_run = l;
                w.maximal = true;
                nodes_.push_back(std::move(w));
                nodes_[u].edge_map.emplace(label, child);
            }
        }
    }

    // Flattens edges into sorted vectors and snapshots the per-symbol run
    // exponents needed by occurrence queries.
    void finalize(const RleString<Sym>& rle) {
        for (Node& v : nodes_) {
            v.edges.assign(v.edge_map.begin(), v.edge_map.end());
            v.edge_map.clear();
        }
        std::map<Sym, std::vector<exp_type>> by_symbol;
        for (const Run<Sym>& r : rle.runs()) by_symbol[r.symbol].push_back(r.exponent);
        for (auto& [sym, exps] : by_symbol) {
            std::sort(exps.begin(), exps.end());
            ExpStats st;
            st.exponents = std::move(exps);
            st.suffix_sum.assign(st.exponents.size() + 1, 0);
            for (std::size_t i = st.exponents.size(); i-- > 0;)
                st.suffix_sum[i] = st.suffix_sum[i + 1] + st.exponents[i];
            exp_stats_.emplace(sym, std::move(st));
        }
        finalized_ = true;
    }

    // Occurrences of the node's palindrome anywhere in the text, boundary
    // aligned or not. A single run c^g occurs once inside c^f per choice of
    // offset, f - g + 1 ways; a composite c^g P' c^g occurs once per
    // occurrence of a sibling palindrome c^f P' c^f with f >= g, because
    // trimming that occurrence to flank g identifies it uniquely.
    std::uint64_t substring_occurrences(std::uint32_t id) const {
        if (!finalized_)
            throw std::logic_error("rle eertree: occurrence query before finalize");
        if (id >= nodes_.size())
            throw std::out_of_range("rle eertree: node id out of range");
        if (id <= kRootEmpty)
            throw std::invalid_argument("rle eertree: occurrence count undefined for roots");
        const Node& v = nodes_[id];
        const Sym c = v.in_label.symbol;
        const exp_type g = v.in_label.exponent;
        if (v.run_len == 1) {
            const ExpStats& st = exp_stats_.at(c);
            const auto it = std::lower_bound(st.exponents.begin(), st.exponents.end(), g);
            const std::uint64_t cnt = static_cast<std::uint64_t>(st.exponents.end() - it);
            const std::size_t idx = static_cast<std::size_t>(it - st.exponents.begin());
            return st.suffix_sum[idx] - cnt * (g - 1);
        }
        const Node& p = nodes_[v.parent];
        std::uint64_t total = 0;
        auto it = std::lower_bound(p.edges.begin(), p.edges.end(), Run<Sym>{c, g},
                                   [](const auto& e, const Run<Sym>& key) { return e.first < key; });
        for (; it != p.edges.end() && it->first.symbol == c; ++it)
            total += nodes_[it->second].count;
        return total;
    }

    std::size_t node_count() const { return nodes_.size(); }

    // Nodes that stand for palindromes: everything but the length -1 sentinel.
    std::size_t palindrome_node_count() const { return nodes_.size() - 1; }

    std::size_t bounded_node_count() const {
        std::size_t k = 0;
        for (const Node& v : nodes_) k += v.rle_bounded ? 1 : 0;
        return k;
    }

    const Node& node(std::uint32_t id) const {
        if (id >= nodes_.size())
            throw std::out_of_range("rle eertree: node id out of range");
        return nodes_[id];
    }

    // Longest run-boundary-bounded palindromic suffix of runs 1..j.
    std::uint32_t longest_suffix_at(run_index j) const {
        if (j < 1 || j >= pos_longest_.size())
            throw std::out_of_range("rle eertree: run index out of range");
        return pos_longest_[j];
    }

    // Looks a node up by its full run sequence (odd length, must itself be a
    // palindrome of runs). Returns kNoNode if absent. Test helper.
    std::uint32_t node_by_runs(const std::vector<Run<Sym>>& seq) const {
        if (seq.size() % 2 == 0) return kNoNode;
        std::uint32_t v = kRootNeg;
        for (std::size_t i = seq.size() / 2; i < seq.size(); ++i) {
            v = find_child(v, seq[i]);
            if (v == kNoNode) return kNoNode;
        }
        return v;
    }

    // One node per line, then one line per edge. Meant for tests and debug.
    void dump(std::ostream& os) const {
        for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
            const Node& v = nodes_[id];
            os << id << " len=" << v.char_len << " runs=" << v.run_len
               << " cnt=" << v.count << " ctr=" << v.sample_center_run << " flags=";
            if (!v.rle_bounded && !v.maximal) os << '-';
            if (v.rle_bounded) os << "RB";
            if (v.maximal) os << (v.rle_bounded ? "|MX" : "MX");
            os << '\n';
        }
        for (std::uint32_t id = 0; id < nodes_.size(); ++id)
            for_each_edge(id, [&](const Run<Sym>& lab, std::uint32_t child) {
                os << id << " -(" << lab.symbol << ',' << lab.exponent << ")-> "
                   << child << '\n';
            });
    }

    template <typename F>
    void for_each_edge(std::uint32_t id, F&& f) const {
        const Node& v = nodes_[id];
        if (finalized_)
            for (const auto& [lab, child] : v.edges) f(lab, child);
        else
            for (const auto& [lab, child] : v.edge_map) f(lab, child);
    }

    std::size_t memory_bytes() const {
        std::size_t total = nodes_.size() * sizeof(Node);
        for (const Node& v : nodes_)
            total += v.edges.size() * sizeof(std::pair<Run<Sym>, std::uint32_t>);
        return total + pos_longest_.size() * sizeof(std::uint32_t);
    }

private:
    struct ExpStats {
        std::vector<exp_type> exponents;       // sorted ascending
        std::vector<std::uint64_t> suffix_sum;  // suffix sums, one past the end is 0
    };

    // Walks suffix links from u until the palindrome can be extended by
    // run j on both sides, i.e. the run before the occurrence equals run j.
    // The length -1 sentinel always accepts.
    std::uint32_t extend_from(std::uint32_t u, run_index j, const RleString<Sym>& rle) const {
        const Run<Sym>& c = rle.run(j);
        for (;;) {
            if (u == kRootNeg) return u;
            const std::int64_t prev =
                static_cast<std::int64_t>(j) - nodes_[u].run_len - 1;
            if (prev >= 1 && rle.run(static_cast<run_index>(prev)) == c) return u;
            u = nodes_[u].suffix_link;
        }
    }

    std::uint32_t find_child(std::uint32_t u, const Run<Sym>& label) const {
        const Node& v = nodes_[u];
        if (finalized_) {
            auto it = std::lower_bound(
                v.edges.begin(), v.edges.end(), label,
                [](const auto& e, const Run<Sym>& key) { return e.first < key; });
            return it != v.edges.end() && it->first == label ? it->second : kNoNode;
        }
        auto it = v.edge_map.find(label);
        return it != v.edge_map.end() ? it->second : kNoNode;
    }

    std::vector<Node> nodes_;
    std::vector<std::uint32_t> pos_longest_;  // 1-based by run, [0] unused
    std::map<Sym, ExpStats> exp_stats_;
    bool finalized_ = false;
};

}  // namespace sups

#include "sups/rle_eertree.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sups/oracle.hpp"
#include "sups/rle_manacher.hpp"
#include "sups/rle_string.hpp"

using sups::encode_plain;
using sups::MaxPalTable;
using sups::RleString;
using sups::Run;
using Tree = sups::RleEertree<char>;

namespace {

constexpr const char* kFig = "bbbaabbabbaaabbaaabbb";

std::vector<sups::Run<char>> runs_of(std::string_view pal) {
    const RleString<char> r = encode_plain(pal);
    return {r.runs().begin(), r.runs().end()};
}

std::uint32_t find(const Tree& t, std::string_view pal) { return t.node_by_runs(runs_of(pal)); }

// Reads the node's palindrome back off the parent chain: labels run from
// the outermost flank down to the center.
std::string node_text(const Tree& t, std::uint32_t id) {
    std::vector<sups::Run<char>> labels;
    for (std::uint32_t v = id; v != Tree::kRootNeg; v = t.node(v).parent)
        labels.push_back(t.node(v).in_label);
    std::string left;
    for (const sups::Run<char>& r : labels)
        left.append(static_cast<std::size_t>(r.exponent), r.symbol);
    std::string out = left;
    for (std::size_t i = labels.size() - 1; i-- > 0;)
        out.append(static_cast<std::size_t>(labels[i].exponent), labels[i].symbol);
    return out;
}

Tree built(std::string_view text) {
    const RleString<char> rle = encode_plain(text);
    return Tree::build(rle, MaxPalTable{rle});
}

TEST(RleEertree, BoundedPhaseOnFigureString) {
    const RleString<char> rle = encode_plain(kFig);
    const Tree t = Tree::build_bounded(rle);
    EXPECT_EQ(t.bounded_node_count(), 8u);
    EXPECT_EQ(t.palindrome_node_count(), 9u);  // the 8 plus the empty root

    const std::pair<const char*, std::uint64_t> direct[] = {
        {"bbb", 2}, {"aa", 1}, {"bb", 1}, {"a", 1},
        {"aaa", 1}, {"bbabb", 1}, {"bbaaabb", 1}, {"aaabbaaa", 1},
    };
    for (const auto& [pal, cnt] : direct) {
        const std::uint32_t id = find(t, pal);
        ASSERT_NE(id, Tree::kNoNode) << pal;
        EXPECT_TRUE(t.node(id).rle_bounded) << pal;
        EXPECT_FALSE(t.node(id).maximal) << pal;
        EXPECT_EQ(t.node(id).count, cnt) << pal;
    }
    EXPECT_EQ(find(t, "bab"), Tree::kNoNode);     // not boundary aligned
    EXPECT_EQ(find(t, "aabbaa"), Tree::kNoNode);  // even run count, cannot exist

    const std::uint32_t whole = find(t, "bbaaabb");
    EXPECT_EQ(t.node(whole).char_len, 7u);
    EXPECT_EQ(t.node(whole).run_len, 3);
    EXPECT_EQ(t.node(whole).parent, find(t, "aaa"));
    EXPECT_EQ(t.node(whole).in_label, (sups::Run<char>{'b', 2}));
    EXPECT_EQ(t.node(whole).sample_center_run, 6u);
    EXPECT_EQ(t.node(whole).suffix_link, find(t, "bb"));

    EXPECT_EQ(t.longest_suffix_at(5), find(t, "bbabb"));
    EXPECT_EQ(t.longest_suffix_at(9), find(t, "bbb"));
    EXPECT_THROW(t.longest_suffix_at(0), std::out_of_range);
    EXPECT_THROW(t.longest_suffix_at(10), std::out_of_range);
}

TEST(RleEertree, PropagatedCounts) {
    const RleString<char> rle = encode_plain(kFig);
    Tree t = Tree::build_bounded(rle);
    t.propagate_counts();
    EXPECT_EQ(t.node(find(t, "bb")).count, 3u);   // own + bbabb + bbaaabb
    EXPECT_EQ(t.node(find(t, "aaa")).count, 2u);  // own + aaabbaaa
    EXPECT_EQ(t.node(find(t, "bbb")).count, 2u);
    EXPECT_EQ(t.node(find(t, "a")).count, 1u);
    EXPECT_EQ(t.node(find(t, "bbabb")).count, 1u);
}

TEST(RleEertree, MaximalPhaseOnFigureString) {
    const Tree t = built(kFig);
    EXPECT_EQ(t.palindrome_node_count(), 14u);  // 8 bounded + 5 grafted + empty
    EXPECT_EQ(t.bounded_node_count(), 8u);
    EXPECT_LE(t.palindrome_node_count(), 2u * 9 + 1);

    // Existing node picked up a second, maximal occurrence.
    const std::uint32_t both = find(t, "bbaaabb");
    EXPECT_EQ(t.node(both).count, 2u);
    EXPECT_TRUE(t.node(both).rle_bounded);
    EXPECT_TRUE(t.node(both).maximal);

    const std::tuple<const char*, std::uint64_t, sups::run_index> grafted[] = {
        {"bbaabb", 1, 2},
        {"abba", 2, 3},
        {"aabbabbaa", 1, 4},
        {"abbaaabba", 1, 6},
        {"bbaaabbaaabb", 1, 7},
    };
    for (const auto& [pal, cnt, ctr] : grafted) {
        const std::uint32_t id = find(t, pal);
        ASSERT_NE(id, Tree::kNoNode) << pal;
        EXPECT_FALSE(t.node(id).rle_bounded) << pal;
        EXPECT_TRUE(t.node(id).maximal) << pal;
        EXPECT_EQ(t.node(id).count, cnt) << pal;
        EXPECT_EQ(t.node(id).sample_center_run, ctr) << pal;
        EXPECT_EQ(node_text(t, id), pal);
    }
}

TEST(RleEertree, ExtensionExampleString) {
    const Tree t = built("caabbcccbbaaaac");
    const std::uint32_t big = find(t, "aabbcccbbaa");
    ASSERT_NE(big, Tree::kNoNode);
    EXPECT_EQ(t.node(big).char_len, 11u);
    EXPECT_EQ(t.node(big).run_len, 5);
    EXPECT_EQ(t.node(big).sample_center_run, 4u);
    EXPECT_FALSE(t.node(big).rle_bounded);
    EXPECT_TRUE(t.node(big).maximal);
    EXPECT_EQ(t.node(big).parent, find(t, "bbcccbb"));
}

TEST(RleEertree, SubstringOccurrences) {
    const Tree t = built(kFig);
    EXPECT_EQ(t.substring_occurrences(find(t, "aa")), 5u);
    EXPECT_EQ(t.substring_occurrences(find(t, "a")), 9u);
    EXPECT_EQ(t.substring_occurrences(find(t, "bb")), 7u);
    EXPECT_EQ(t.substring_occurrences(find(t, "bbb")), 2u);
    EXPECT_EQ(t.substring_occurrences(find(t, "bbabb")), 1u);
    EXPECT_EQ(t.substring_occurrences(find(t, "bbaaabb")), 2u);
    EXPECT_EQ(t.substring_occurrences(find(t, "abba")), 3u);
    EXPECT_THROW(t.substring_occurrences(Tree::kRootNeg), std::invalid_argument);
    EXPECT_THROW(t.substring_occurrences(Tree::kRootEmpty), std::invalid_argument);
    EXPECT_THROW(t.substring_occurrences(999), std::out_of_range);
}

TEST(RleEertree, SingleRunString) {
    const Tree t = built("aaaaa");
    EXPECT_EQ(t.palindrome_node_count(), 2u);
    EXPECT_LE(t.palindrome_node_count(), 2u * 1 + 1);
    const std::uint32_t id = find(t, "aaaaa");
    ASSERT_NE(id, Tree::kNoNode);
    EXPECT_EQ(t.node(id).count, 1u);
    EXPECT_EQ(t.substring_occurrences(id), 1u);
}

TEST(RleEertree, EmptyString) {
    const Tree t = built("");
    EXPECT_EQ(t.palindrome_node_count(), 1u);
    EXPECT_EQ(t.bounded_node_count(), 0u);
}

TEST(RleEertree, DumpFormat) {
    const Tree t = built("aaba");
    std::ostringstream os;
    t.dump(os);
    EXPECT_EQ(os.str(),
              "0 len=0 runs=-1 cnt=0 ctr=0 flags=-\n"
              "1 len=0 runs=0 cnt=0 ctr=0 flags=-\n"
              "2 len=2 runs=1 cnt=1 ctr=1 flags=RB\n"
              "3 len=1 runs=1 cnt=1 ctr=2 flags=RB\n"
              "4 len=1 runs=1 cnt=1 ctr=3 flags=RB\n"
              "5 len=3 runs=3 cnt=1 ctr=2 flags=MX\n"
              "0 -(a,1)-> 4\n"
              "0 -(a,2)-> 2\n"
              "0 -(b,1)-> 3\n"
              "3 -(a,1)-> 5\n");
}

// Occurrence counts, flags and structure against the brute-force
// reference on random strings.
TEST(RleEertree, MatchesOracleOnRandomStrings) {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 120; ++iter) {
        const std::size_t m = 1 + rng() % 14;
        std::string text;
        unsigned prev = 9;
        for (std::size_t i = 0; i < m; ++i) {
            unsigned sym = prev == 9 ? rng() % 3 : rng() % 2;
            if (prev != 9 && sym >= prev) ++sym;
            text.append(1 + rng() % 4, static_cast<char>('a' + sym));
            prev = sym;
        }
        const RleString<char> rle = encode_plain(text);
        const Tree t = built(text);
        EXPECT_LE(t.palindrome_node_count(), 2 * rle.run_count() + 1) << text;
        EXPECT_LE(t.bounded_node_count(), rle.run_count()) << text;

        for (std::uint32_t id = Tree::kRootEmpty + 1; id < t.node_count(); ++id) {
            const auto& v = t.node(id);
            const std::string pal = node_text(t, id);
            EXPECT_TRUE(sups::oracle::is_palindrome(pal)) << text << ' ' << pal;
            EXPECT_EQ(pal.size(), v.char_len);
            EXPECT_EQ(t.substring_occurrences(id), sups::oracle::occurrences(text, pal))
                << text << ' ' << pal;
            if (v.parent > Tree::kRootEmpty)
                EXPECT_EQ(v.char_len, t.node(v.parent).char_len + 2 * v.in_label.exponent);

            // Flag soundness, occurrence by occurrence.
            bool any_bounded = false, any_maximal = false;
            for (std::size_t p = 0; p + pal.size() <= text.size(); ++p) {
                if (text.compare(p, pal.size(), pal) != 0) continue;
                const std::size_t q = p + pal.size() - 1;
                any_maximal |= p == 0 || q + 1 == text.size() || text[p - 1] != text[q + 1];
                any_bounded |= rle.run_begin(rle.run_of_position(p + 1)) == p + 1 &&
                               rle.run_end(rle.run_of_position(q + 1)) == q + 1;
            }
            if (v.rle_bounded) EXPECT_TRUE(any_bounded) << text << ' ' << pal;
            if (v.maximal) EXPECT_TRUE(any_maximal) << text << ' ' << pal;
        }
    }
}

}  // namespace

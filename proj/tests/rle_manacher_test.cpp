#include "sups/rle_manacher.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "sups/oracle.hpp"
#include "sups/rle_string.hpp"

using sups::encode_plain;
using sups::MaxPalTable;
using sups::RleString;

namespace {

constexpr const char* kFig = "bbbaabbabbaaabbaaabbb";

TEST(RleManacher, RadiiOnFigureString) {
    const auto radii = sups::run_palindrome_radii(encode_plain(kFig));
    EXPECT_EQ(radii, (std::vector<std::uint32_t>{0, 0, 0, 1, 0, 1, 1, 0, 0}));
}

TEST(RleManacher, MaxLenOnFigureString) {
    const MaxPalTable t{encode_plain(kFig)};
    const sups::len_type want[] = {3, 6, 4, 9, 4, 9, 12, 7, 3};
    ASSERT_EQ(t.run_count(), 9u);
    for (sups::run_index j = 1; j <= 9; ++j) EXPECT_EQ(t.max_length(j), want[j - 1]) << j;
}

TEST(RleManacher, ExtensionExample) {
    // bbcccbb spans runs 3..5; both flanks are a-runs, so two more
    // characters fit on each side.
    const RleString<char> rle = encode_plain("caabbcccbbaaaac");
    const MaxPalTable t{rle};
    EXPECT_EQ(t.radius(4), 1u);
    EXPECT_EQ(rle.run_end(5) - rle.run_begin(3) + 1, 7u);
    EXPECT_EQ(t.max_length(4), 11u);
    EXPECT_EQ(t.max_length(2), 2u);  // flanks differ, the run is all there is
    const sups::len_type want[] = {1, 2, 2, 11, 2, 4, 1};
    for (sups::run_index j = 1; j <= 7; ++j) EXPECT_EQ(t.max_length(j), want[j - 1]) << j;
}

TEST(RleManacher, TinyInputs) {
    EXPECT_EQ(MaxPalTable{encode_plain("")}.run_count(), 0u);
    const MaxPalTable one{encode_plain("aaaaa")};
    EXPECT_EQ(one.radius(1), 0u);
    EXPECT_EQ(one.max_length(1), 5u);
    const MaxPalTable two{encode_plain("ab")};
    EXPECT_EQ(two.max_length(1), 1u);
    EXPECT_EQ(two.max_length(2), 1u);
}

TEST(RleManacher, AccessorRangeChecks) {
    const MaxPalTable t{encode_plain("aab")};
    EXPECT_THROW(t.radius(0), std::out_of_range);
    EXPECT_THROW(t.radius(3), std::out_of_range);
    EXPECT_THROW(t.max_length(0), std::out_of_range);
    EXPECT_THROW(t.max_length(3), std::out_of_range);
}

TEST(RleManacher, MatchesOracleOnRandomStrings) {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 250; ++iter) {
        const std::size_t n = 1 + rng() % 60;
        std::string text;
        for (std::size_t i = 0; i < n; ++i) text.push_back(static_cast<char>('a' + rng() % 3));
        const RleString<char> rle = encode_plain(text);
        const MaxPalTable t{rle};
        const auto want = sups::oracle::run_centered_max_len(text);
        ASSERT_EQ(t.run_count(), want.size());
        for (sups::run_index j = 1; j <= rle.run_count(); ++j) {
            EXPECT_EQ(t.max_length(j), want[j - 1]) << text << " run " << j;
            // Basic shape: at least the run itself, inside the text, and an
            // interval symmetric about the doubled center.
            EXPECT_GE(t.max_length(j), rle.run(j).exponent);
            const sups::pos_type c2 = rle.run_center_doubled(j);
            EXPECT_EQ((c2 + t.max_length(j)) % 2, 1u);
            EXPECT_GE(c2, t.max_length(j) + 1);
            EXPECT_LE((c2 + t.max_length(j) - 1) / 2, rle.length());
        }
    }
}

}  // namespace

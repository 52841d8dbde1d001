#pragma once

// Randomized and exhaustive cross-checking of the index against the
// brute-force reference, plus structural bound checks. Three suites:
// a handful of fixed strings with known-interesting structure, every
// binary string up to length 12, and seeded random RLE strings. Each case
// compares MUPS sets, per-run longest-palindrome lengths and the answers
// of every interval query. Failing random cases are shrunk run by run
// before being reported.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "sups_index.hpp"

namespace sups {

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t random_cases = 1000;
    std::size_t max_runs = 30;
    exp_type max_exponent = 5;
    unsigned alphabet = 4;
    MupsOptions mups{};
};

struct Counterexample {
    std::string text;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<Counterexample> samples;  // first few failures, shrunk

    bool passed() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    std::uint64_t bound_violations = 0;

    bool all_passed() const {
        if (bound_violations > 0) return false;
        for (const SuiteResult& s : suites)
            if (!s.passed()) return false;
        return true;
    }
};

namespace detail {

inline std::string format_intervals(const std::vector<oracle::Interval>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << '[' << v[i].beg << ',' << v[i].end << ']';
    os << '}';
    return os.str();
}

inline std::string format_intervals(const std::vector<Interval>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << '[' << v[i].beg << ',' << v[i].end << ']';
    os << '}';
    return os.str();
}

}  // namespace detail

// Runs one string through every comparison. Returns a description of the
// first mismatch, or nothing. Bound violations (which are also failures)
// additionally tick the counter when one is supplied.
inline std::optional<std::string> check_case(std::string_view text, const MupsOptions& mopts,
                                             std::uint64_t* bound_violations = nullptr) {
    const oracle::Analysis ref{std::string(text)};
    const RleString<char> rle = encode_plain(text);
    const std::size_t m = rle.run_count();
    const pos_type n = rle.length();

    BuildStats stats;
    SupsIndex<char> idx;
    try {
        idx = SupsIndex<char>::build(rle, mopts, &stats);
    } catch (const std::exception& e) {
        return std::string("index construction threw: ") + e.what();
    }

    const auto bound_fail = [&](std::string msg) {
        if (bound_violations) ++*bound_violations;
        return msg;
    };
    if (stats.eertree_nodes > 2 * m + 1)
        return bound_fail("bound violated: eertree has " + std::to_string(stats.eertree_nodes) +
                          " nodes, limit " + std::to_string(2 * m + 1));
    if (stats.mups_count > m)
        return bound_fail("bound violated: " + std::to_string(stats.mups_count) +
                          " MUPSs on " + std::to_string(m) + " runs");
    const MupsList& got_mups = idx.mups();
    for (std::size_t i = 1; i < got_mups.size(); ++i)
        if (got_mups.beg[i - 1] >= got_mups.beg[i] || got_mups.end[i - 1] >= got_mups.end[i])
            return bound_fail("bound violated: MUPS intervals nest");
    if (ref.distinct_palindrome_count() > n + 1)
        return bound_fail("bound violated: " + std::to_string(ref.distinct_palindrome_count()) +
                          " distinct palindromes, limit n + 1 = " + std::to_string(n + 1));

    const std::vector<oracle::Interval> want_mups = ref.mups();
    bool mups_ok = want_mups.size() == got_mups.size();
    for (std::size_t i = 0; mups_ok && i < want_mups.size(); ++i)
        mups_ok = want_mups[i].beg == got_mups.beg[i] && want_mups[i].end == got_mups.end[i];
    if (!mups_ok) {
        std::ostringstream os;
        os << "mups mismatch: expected " << detail::format_intervals(want_mups) << " got {";
        for (std::size_t i = 0; i < got_mups.size(); ++i)
            os << (i ? "," : "") << '[' << got_mups.beg[i] << ',' << got_mups.end[i] << ']';
        os << '}';
        return os.str();
    }

    const std::vector<len_type> want_lens = ref.run_centered_max_len();
    for (std::size_t j = 0; j < m; ++j)
        if (want_lens[j] != idx.max_palindromes().max_length(j + 1))
            return "max_len mismatch at run " + std::to_string(j + 1) + ": expected " +
                   std::to_string(want_lens[j]) + " got " +
                   std::to_string(idx.max_palindromes().max_length(j + 1));

    try {
        std::vector<Interval> got;
        for (pos_type s = 1; s <= n; ++s) {
            for (pos_type t = s; t <= n; ++t) {
                const std::vector<oracle::Interval> want = ref.sups(s, t);
                idx.query_into(s, t, got);
                bool ok = want.size() == got.size();
                for (std::size_t i = 0; ok && i < want.size(); ++i)
                    ok = want[i].beg == got[i].beg && want[i].end == got[i].end;
                if (!ok) {
                    std::ostringstream os;
                    os << "sups mismatch at [" << s << ',' << t << "]: expected "
                       << detail::format_intervals(want) << " got "
                       << detail::format_intervals(got);
                    return os.str();
                }
            }
        }
    } catch (const std::exception& e) {
        return std::string("query threw: ") + e.what();
    }
    return std::nullopt;
}

// Greedy run-granularity shrinking: drop whole runs, then single
// characters, as long as the case keeps failing. Capped so pathological
// cases cannot stall a report.
inline std::string shrink_failure(std::string text, const MupsOptions& mopts,
                                  std::size_t max_checks = 400) {
    std::size_t checks = 0;
    const auto still_fails = [&](const std::string& t) {
        return ++checks <= max_checks && check_case(t, mopts).has_value();
    };
    bool improved = true;
    while (improved && checks < max_checks) {
        improved = false;
        const RleString<char> rle = encode_plain(text);
        for (run_index j = 1; j <= rle.run_count() && !improved; ++j) {
            std::string cand = text;
            cand.erase(static_cast<std::size_t>(rle.run_begin(j)) - 1,
                       static_cast<std::size_t>(rle.run(j).exponent));
            if (still_fails(cand)) {
                text = std::move(cand);
                improved = true;
            }
        }
        for (run_index j = 1; j <= rle.run_count() && !improved; ++j) {
            if (rle.run(j).exponent < 2) continue;
            std::string cand = text;
            cand.erase(static_cast<std::size_t>(rle.run_begin(j)) - 1, 1);
            if (still_fails(cand)) {
                text = std::move(cand);
                improved = true;
            }
        }
    }
    return text;
}

// Random RLE string within the limits: adjacent runs always differ.
inline std::string random_rle_text(std::mt19937_64& rng, const VerifyOptions& opt) {
    std::uniform_int_distribution<std::size_t> m_dist(1, opt.max_runs);
    std::uniform_int_distribution<unsigned> sigma_dist(2, std::max(2u, opt.alphabet));
    std::uniform_int_distribution<exp_type> e_dist(1, opt.max_exponent);
    const std::size_t m = m_dist(rng);
    const unsigned sigma = sigma_dist(rng);
    std::string out;
    unsigned prev = sigma;  // sentinel: no previous symbol
    for (std::size_t i = 0; i < m; ++i) {
        unsigned sym;
        if (prev == sigma) {
            sym = static_cast<unsigned>(rng() % sigma);
        } else {
            sym = static_cast<unsigned>(rng() % (sigma - 1));
            if (sym >= prev) ++sym;
        }
        out.append(static_cast<std::size_t>(e_dist(rng)), static_cast<char>('a' + sym));
        prev = sym;
    }
    return out;
}

inline VerifyReport run_verification(const VerifyOptions& opt = {}) {
    VerifyReport rep;
    const auto run_case = [&](SuiteResult& suite, const std::string& text, bool shrink) {
        ++suite.cases;
        std::optional<std::string> fail = check_case(text, opt.mups, &rep.bound_violations);
        if (!fail) return;
        ++suite.failures;
        if (suite.samples.size() >= 8) return;
        std::string shown = shrink ? shrink_failure(text, opt.mups) : text;
        std::optional<std::string> detail = check_case(shown, opt.mups);
        suite.samples.push_back(Counterexample{shown, detail.value_or(*fail)});
    };

    SuiteResult fixed{.name = "fixed-examples"};
    static const char* const kFixed[] = {
        "",
        "a",
        "ab",
        "aaaaa",
        "aaba",
        "abcba",
        "abacaba",
        "abcdefghij",
        "bbbaabbabbaaabbaaabbb",
        "caabbcccbbaaaac",
        "aacccccccbbabbbb",
    };
    for (const char* s : kFixed) run_case(fixed, s, false);
    rep.suites.push_back(std::move(fixed));

    SuiteResult exhaustive{.name = "exhaustive(binary,n<=12)"};
    for (std::size_t len = 1; len <= 12; ++len) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            std::string s(len, 'a');
            for (std::size_t i = 0; i < len; ++i)
                if (mask >> i & 1) s[i] = 'b';
            run_case(exhaustive, s, false);
        }
    }
    rep.suites.push_back(std::move(exhaustive));

    SuiteResult random{.name = "random"};
    std::mt19937_64 rng(opt.seed);
    for (std::size_t c = 0; c < opt.random_cases; ++c)
        run_case(random, random_rle_text(rng, opt), true);
    rep.suites.push_back(std::move(random));
    return rep;
}

inline void print_report(std::ostream& os, const VerifyReport& rep) {
    for (const SuiteResult& s : rep.suites) {
        os << s.name << ": " << (s.passed() ? "PASS" : "FAIL") << " (" << s.cases
           << " cases";
        if (s.failures > 0) os << ", " << s.failures << " failing";
        os << ")\n";
        if (s.cases == 0)
            os << "  warning: no cases were run; this suite is vacuous\n";
        for (const Counterexample& ce : s.samples) {
            os << "  counterexample: \"" << ce.text << "\"";
            const RleString<char> rle = encode_plain(ce.text);
            os << "  (rle:";
            for (const Run<char>& r : rle.runs()) os << ' ' << r.symbol << ':' << r.exponent;
            os << ")\n    " << ce.detail << '\n';
        }
    }
    os << "structural bounds: "
       << (rep.bound_violations == 0 ? "PASS"
                                     : "FAIL (" + std::to_string(rep.bound_violations) +
                                           " violations)")
       << '\n';
    os << "verification: " << (rep.all_passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace sups

#pragma once

// Subcommand implementations behind the sups tool. Kept in the library so
// tests can drive them with in-memory streams. Exit codes: 0 success,
// 1 verification failure or per-query errors, 2 usage and I/O errors.

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "sups_index.hpp"
#include "verify.hpp"

namespace sups::cli {

// Whitespace-separated <char>:<count> tokens. The character is a single
// printable byte other than ':'; counts are positive decimal integers.
inline RleString<char> parse_rle_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Run<char>> runs;
    std::string tok;
    std::size_t k = 0;
    while (in >> tok) {
        ++k;
        const std::string where = "rle: token " + std::to_string(k) + " '" + tok + "'";
        if (tok.size() < 3 || tok[1] != ':')
            throw std::invalid_argument(where + " is not <char>:<count>");
        const char sym = tok[0];
        if (!std::isprint(static_cast<unsigned char>(sym)) || sym == ':')
            throw std::invalid_argument(where + " has a bad character");
        exp_type count = 0;
        const auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), count);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument(where + " has a bad count");
        if (count == 0)
            throw std::invalid_argument(where + " has count zero");
        runs.push_back(Run<char>{sym, count});
    }
    return RleString<char>(std::move(runs));  // rejects adjacent equal symbols
}

struct BuildQueryConfig {
    std::string format;        // "plain" or "rle"
    std::string input_path;
    std::string queries_path;  // empty: read queries from fallback stream
};

inline int run_build_query(const BuildQueryConfig& cfg, std::istream& query_fallback,
                           std::ostream& out, std::ostream& err) {
    std::ifstream input(cfg.input_path, std::ios::binary);
    if (!input) {
        err << "error: cannot open input file '" << cfg.input_path << "'\n";
        return 2;
    }
    std::string data{std::istreambuf_iterator<char>(input), std::istreambuf_iterator<char>()};

    RleString<char> rle;
    try {
        if (cfg.format == "plain") {
            if (!data.empty() && data.back() == '\n') data.pop_back();
            rle = encode_plain(data);
        } else if (cfg.format == "rle") {
            rle = parse_rle_text(data);
        } else {
            err << "error: unknown format '" << cfg.format << "'\n";
            return 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const SupsIndex<char> idx = SupsIndex<char>::build(std::move(rle));
    const pos_type n = idx.rle().length();

    std::ifstream query_file;
    if (!cfg.queries_path.empty()) {
        query_file.open(cfg.queries_path);
        if (!query_file) {
            err << "error: cannot open query file '" << cfg.queries_path << "'\n";
            return 2;
        }
    }
    std::istream& queries = cfg.queries_path.empty() ? query_fallback : query_file;

    bool had_error = false;
    std::string line;
    std::vector<Interval> ans;
    while (std::getline(queries, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        pos_type s = 0, t = 0;
        std::string extra;
        if (!(ls >> s >> t) || (ls >> extra)) {
            out << "error: malformed query line\n";
            had_error = true;
            continue;
        }
        if (s < 1 || s > t || t > n) {
            out << "error: interval out of range [1," << n << "]\n";
            had_error = true;
            continue;
        }
        idx.query_into(s, t, ans);
        if (ans.empty()) {
            out << "none\n";
        } else {
            for (std::size_t i = 0; i < ans.size(); ++i)
                out << ans[i].beg << '-' << ans[i].end << (i + 1 < ans.size() ? ' ' : '\n');
        }
    }
    return had_error ? 1 : 0;
}

struct VerifyCliConfig {
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
};

inline int run_verify(const VerifyCliConfig& cfg, std::ostream& out) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.random_cases = cfg.cases;
    const VerifyReport rep = run_verification(opt);
    print_report(out, rep);
    return rep.all_passed() ? 0 : 1;
}

struct BenchCliConfig {
    std::uint64_t seed = 42;
};

inline int run_bench(const BenchCliConfig& cfg, std::ostream& out) {
    write_csv_header(out);
    for (const std::size_t m : {1000u, 10000u, 100000u}) {
        for (const exp_type scale : {exp_type{10}, exp_type{1000000000}}) {
            write_csv_row(out, bench_config(m, scale, cfg.seed));
            out.flush();
        }
    }
    return 0;
}

}  // namespace sups::cli

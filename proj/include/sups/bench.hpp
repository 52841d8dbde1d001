#pragma once

// Build and throughput measurements. Configurations pair a run count m
// with an exponent scale: the base case draws exponents in [1, 10], the
// scaled case multiplies those same draws by a constant. Scaling keeps
// every (symbol, exponent) equality relation intact, so the two indexes
// have identical combinatorial structure and the comparison isolates the
// effect of n alone.

#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "sups_index.hpp"

namespace sups {

struct BenchRow {
    std::size_t m = 0;
    exp_type exp_scale = 0;  // largest possible exponent: 10 or 10 * factor
    pos_type n = 0;
    double build_ms = 0;
    std::size_t index_bytes = 0;
    double queries_per_sec = 0;
};

// Base exponents depend on m and seed only, never on the scale.
inline std::vector<Run<char>> bench_base_runs(std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (m + 1)));
    std::uniform_int_distribution<exp_type> e_dist(1, 10);
    std::vector<Run<char>> runs;
    runs.reserve(m);
    unsigned prev = 4;
    for (std::size_t i = 0; i < m; ++i) {
        unsigned sym;
        if (prev == 4) {
            sym = static_cast<unsigned>(rng() % 4);
        } else {
            sym = static_cast<unsigned>(rng() % 3);
            if (sym >= prev) ++sym;
        }
        runs.push_back(Run<char>{static_cast<char>('a' + sym), e_dist(rng)});
        prev = sym;
    }
    return runs;
}

inline BenchRow bench_config(std::size_t m, exp_type exp_scale, std::uint64_t seed,
                             std::size_t query_count = 1'000'000, int build_repeats = 3) {
    using clock = std::chrono::steady_clock;

    std::vector<Run<char>> runs = bench_base_runs(m, seed);
    const exp_type factor = exp_scale / 10;
    for (Run<char>& r : runs) r.exponent *= factor;
    const RleString<char> rle{std::move(runs)};

    BenchRow row;
    row.m = m;
    row.exp_scale = exp_scale;
    row.n = rle.length();

    SupsIndex<char> idx;
    double best_ms = 0;
    for (int rep = 0; rep < build_repeats; ++rep) {
        const auto t0 = clock::now();
        idx = SupsIndex<char>::build(rle);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        if (rep == 0 || ms < best_ms) best_ms = ms;
    }
    row.build_ms = best_ms;
    row.index_bytes = idx.memory_bytes();

    std::mt19937_64 qrng(seed ^ 0xD6E8FEB86659FD93ull);
    std::uniform_int_distribution<pos_type> p_dist(1, rle.length());
    std::vector<std::pair<pos_type, pos_type>> queries(query_count);
    for (auto& [s, t] : queries) {
        s = p_dist(qrng);
        t = p_dist(qrng);
        if (s > t) std::swap(s, t);
    }

    std::uint64_t checksum = 0;
    std::vector<Interval> ans;
    const auto t0 = clock::now();
    for (const auto& [s, t] : queries) {
        idx.query_into(s, t, ans);
        checksum += ans.size() + (ans.empty() ? 0 : ans.front().beg);
    }
    const double sec = std::chrono::duration<double>(clock::now() - t0).count();
    static volatile std::uint64_t sink;
    sink = checksum;
    row.queries_per_sec = static_cast<double>(query_count) / sec;
    return row;
}

inline void write_csv_header(std::ostream& os) {
    os << "m,exp_scale,n,build_ms,index_bytes,queries_per_sec\n";
}

inline void write_csv_row(std::ostream& os, const BenchRow& row) {
    os << row.m << ',' << row.exp_scale << ',' << row.n << ',' << row.build_ms << ','
       << row.index_bytes << ',' << row.queries_per_sec << '\n';
}

}  // namespace sups

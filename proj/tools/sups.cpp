#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sups/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"shortest unique palindromic substring queries over run-length encoded text"};
    app.require_subcommand(1);

    sups::cli::BuildQueryConfig bq;
    CLI::App* build = app.add_subcommand(
        "build-query", "build an index from a text file and answer interval queries");
    build->add_option("--format", bq.format, "input encoding: plain or rle")
        ->required()
        ->check(CLI::IsMember({"plain", "rle"}));
    build->add_option("--input", bq.input_path, "input file")->required();
    build->add_option("--queries", bq.queries_path,
                      "query file, one 's t' pair per line (default: stdin)");

    sups::cli::VerifyCliConfig vf;
    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the index against a brute-force reference");
    verify->add_option("--seed", vf.seed, "random seed");
    verify->add_option("--cases", vf.cases, "number of random cases");

    sups::cli::BenchCliConfig bn;
    CLI::App* bench = app.add_subcommand("bench", "print build/query measurements as CSV");
    bench->add_option("--seed", bn.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (build->parsed()) return sups::cli::run_build_query(bq, std::cin, std::cout, std::cerr);
    if (verify->parsed()) return sups::cli::run_verify(vf, std::cout);
    if (bench->parsed()) return sups::cli::run_bench(bn, std::cout);
    return 2;
}

#include <CLI11.hpp>
#include <iostream>

#include "fr/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Fan-Raspaud triples: analysis, construction and verification "
                 "for bridgeless cubic graphs"};
    app.require_subcommand(1);

    std::string path, dir;
    fr::cli::SolveFlags solve_flags;
    fr::cli::CorpusFlags corpus_flags;
    fr::cli::LemmasFlags lemmas_flags;
    bool table = false;

    auto* analyze = app.add_subcommand("analyze", "structural report for a graph file");
    analyze->add_option("file", path, "graph6/sparse6 file")->required();

    auto* solve = app.add_subcommand("solve", "find three perfect matchings with empty intersection");
    solve->add_option("file", path, "graph6/sparse6 file")->required();
    solve->add_option("--strategy", solve_flags.strategy, "auto | brute | balanced")
        ->check(CLI::IsMember({"auto", "brute", "balanced"}));
    std::int64_t timeout_ms = -1;
    solve->add_option("--timeout-ms", timeout_ms, "wall-clock budget");
    std::uint64_t max_pms = 0;
    solve->add_option("--max-pms", max_pms, "cap on matchings tried");
    std::string cert_out;
    solve->add_option("--out", cert_out, "also write the certificate JSON here");

    auto* corpus = app.add_subcommand("corpus", "solve every graph file in a directory");
    corpus->add_option("dir", dir, "directory of graph6/sparse6 files")->required();
    corpus->add_option("--jobs", corpus_flags.jobs, "parallel workers");
    corpus->add_option("--out-dir", corpus_flags.out_dir, "certificate output directory");
    std::int64_t corpus_timeout = -1;
    corpus->add_option("--timeout-ms", corpus_timeout, "per-graph budget");
    corpus->add_flag("--table", table, "render an aligned text table");

    auto* lemmas = app.add_subcommand("lemmas", "run the exhaustive property suites");
    std::string lemma_name, dump_dir;
    int max_len = 0, max_n = 0;
    lemmas->add_option("--lemma", lemma_name,
                       "triples | pairs | pairs-ab | avoidance | uniform | three-cut");
    lemmas->add_option("--max-len", max_len, "largest cycle length");
    lemmas->add_option("--max-n", max_n, "largest generated graph order");
    lemmas->add_flag("--inject-mutant", lemmas_flags.inject_mutant,
                     "test mode: corrupt one table entry");
    lemmas->add_option("--dump-tables", dump_dir, "write the base-case tables and exit");

    auto* reduce = app.add_subcommand("reduce", "reduce, solve the reduction, lift back");
    reduce->add_option("file", path, "graph6/sparse6 file")->required();

    CLI11_PARSE(app, argc, argv);

    fr::cli::CmdResult result;
    if (app.got_subcommand(analyze)) {
        result = fr::cli::cmd_analyze(path);
    } else if (app.got_subcommand(solve)) {
        if (timeout_ms >= 0) solve_flags.timeout_ms = timeout_ms;
        if (max_pms > 0) solve_flags.max_pms = max_pms;
        if (!cert_out.empty()) solve_flags.cert_out = cert_out;
        result = fr::cli::cmd_solve(path, solve_flags);
    } else if (app.got_subcommand(corpus)) {
        if (corpus_timeout >= 0) corpus_flags.timeout_ms = corpus_timeout;
        result = fr::cli::cmd_corpus(dir, corpus_flags);
        if (table && result.output.contains("rows")) {
            std::cout << fr::cli::render_table(result.output["rows"]);
            std::cout << result.output["summary"].dump() << "\n";
            return result.exit_code;
        }
    } else if (app.got_subcommand(lemmas)) {
        if (!lemma_name.empty()) lemmas_flags.lemma = lemma_name;
        if (max_len > 0) lemmas_flags.max_len = max_len;
        if (max_n > 0) lemmas_flags.max_n = max_n;
        if (!dump_dir.empty()) lemmas_flags.dump_tables_dir = dump_dir;
        result = fr::cli::cmd_lemmas(lemmas_flags);
    } else if (app.got_subcommand(reduce)) {
        result = fr::cli::cmd_reduce(path);
    }

    std::cout << result.output.dump(2) << "\n";
    return result.exit_code;
}

#ifndef FR_CLI_HPP
#define FR_CLI_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "fr/suites.hpp"

namespace fr::cli {

// exit-code contract: 0 solved/pass, 1 mathematical failure, 2 input error,
// 3 resource limit
struct CmdResult {
    nlohmann::json output;
    int exit_code = 0;
};

struct SolveFlags {
    std::string strategy = "auto"; // auto | brute | balanced
    std::optional<std::int64_t> timeout_ms;
    std::optional<std::uint64_t> max_pms;
    std::optional<std::string> cert_out; // write certificate JSON here too
};

struct CorpusFlags {
    int jobs = 1;
    bool table = false;
    std::string out_dir = "fr-certs";
    std::optional<std::int64_t> timeout_ms;
};

struct LemmasFlags {
    std::optional<std::string> lemma; // triples | pairs | pairs-ab | avoidance | uniform | three-cut
    std::optional<int> max_len;
    std::optional<int> max_n;
    bool inject_mutant = false;
    std::optional<std::string> dump_tables_dir;
};

CmdResult cmd_analyze(const std::string& path);
CmdResult cmd_solve(const std::string& path, const SolveFlags& flags);
CmdResult cmd_corpus(const std::string& dir, const CorpusFlags& flags);
CmdResult cmd_lemmas(const LemmasFlags& flags);
CmdResult cmd_reduce(const std::string& path);

/// Render a report's rows as an aligned text table.
std::string render_table(const nlohmann::json& rows);

} // namespace fr::cli

#endif

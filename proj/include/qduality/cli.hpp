#pragma once

#include <string>

#include "qduality/verify.hpp"

namespace qduality {

// Parsed command-line surface. Exit codes: 0 all checks pass, 1 at least one
// violation, 2 usage error, 3 I/O failure.
struct RunConfig {
    enum class Command { campaign, werner, axioms, evaluate };
    Command command = Command::campaign;

    CampaignConfig campaign{};
    WernerConfig werner{};
    struct AxiomsConfig {
        int d = 4;
        std::int64_t trials = 1000;
        std::uint64_t seed = 1;
    } axioms;
    struct EvaluateConfig {
        int d = 6;
        int rank = 0;  // 0 = full
        std::uint64_t seed = 1;
        std::int64_t sample_id = 0;
        bool normalized = false;  // also print complementarity sums over their bounds
    } eval;

    std::string output_path;  // empty = per-command default
    bool serial = false;      // run the serial reference engine
    Tolerances tol{};         // shared by the axioms and evaluate commands
};

// Thrown by parse_config when the user asked for --help; carries the text.
struct HelpRequested : Error {
    using Error::Error;
};

// Parses and fully validates argv; throws UsageError naming the bad flag.
RunConfig parse_config(int argc, const char* const* argv);

// Runs the parsed command: writes the CSV, prints a summary, returns 0 or 1.
// Throws IoError on output failures.
int execute(const RunConfig& cfg);

// parse + execute with the exit-code mapping above.
int cli_main(int argc, const char* const* argv);

}  // namespace qduality

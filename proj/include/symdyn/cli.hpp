#pragma once

// Batch front-end. Every subcommand produces one report:
//   {"command": ..., "status": ..., "data": {...}, "timing_ms": ...}
// Exit codes: 0 verified/satisfied, 1 witness/violated, 2 inconclusive,
// 64 usage error, 70 internal error.

#include <json.hpp>

#include <string>
#include <vector>

namespace symdyn::cli {

enum ExitCode : int {
    kOk = 0,
    kRefuted = 1,
    kInconclusive = 2,
    kUsage = 64,
    kInternal = 70,
};

struct Result {
    int exit_code = kInternal;
    nlohmann::json report;
    // What gets written: the JSON report, the text rendering, or help text.
    std::string output;
    std::string output_path;  // empty: standard output
};

// args excludes the program name.
Result run(const std::vector<std::string>& args);

// Runs and writes the output (atomically when --output is given).
int main_entry(int argc, char** argv);

}  // namespace symdyn::cli

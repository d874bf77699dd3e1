#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torusband/checked.hpp"

namespace torusband::cli {

enum class Format { text, json, csv };

struct RunConfig {
    Format format = Format::text;
    Int max_q = 3;
    Int jobs = 1;
    std::optional<Int> seed;  // reserved for randomized subcommands
};

struct SweepRow {
    Int p = 0;
    Int q = 0;
    Int pinch_number = 0;
    Int cf_terms = 0;
    Int ord = 0;
    bool agree = false;
    Int elapsed_ms = 0;
};

// Runs one CLI invocation (args exclude the program name) writing results to
// `out` and diagnostics to `err`. Exit codes: 0 success, 1 usage error,
// 2 domain error, 3 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusband::cli

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hforge/io.hpp"

namespace hforge {

struct CliOptions {
    std::string command;  // construct | realize | cocycle-order | verify
    std::string input;
    std::optional<std::string> out;
    std::optional<std::string> emit;  // construct: write the built structure here
    std::optional<Depth> depth;
    bool parallel = true;
    bool json_only = false;
};

/// Exit code 0 (all checks pass), 1 (a check failed; certificate written) or
/// 2 (invalid input; nothing written).
int run_cli(const CliOptions& opt, std::ostream& out, std::ostream& err);

/// The certificate without its timing block, as written.
std::string certificate_without_timing(const std::string& text);

}  // namespace hforge

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kdescent/lemma_verifier.hpp"

namespace kdescent::cli {

enum ExitStatus : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct VerifyCommand {
    LemmaId lemma;
    unsigned k;
};
struct MinimalModulusCommand {
    unsigned max_k;
};
struct ClassifyCommand {
    std::string element; // or "inf"
};
struct SolveCommand {
    std::string element;
};
struct FactorCommand {
    std::string element;
};
struct ReduceCommand {
    std::string x;
    std::string y;
};
struct SearchCommand {
    std::vector<std::string> coeffs;
    unsigned long height;
};
struct DumpSetCommand {
    std::string set_name; // image-g | cubes | rhs
    unsigned k;
    std::string path;     // "-" for standard output
};

using Command = std::variant<VerifyCommand, MinimalModulusCommand, ClassifyCommand, SolveCommand,
                             FactorCommand, ReduceCommand, SearchCommand, DumpSetCommand>;

struct Options {
    std::optional<std::string> json_path;
    unsigned jobs = 0;
};

/// Validates, executes, prints the certificate to `out` and diagnostics to `err`.
int run(const Command& command, const Options& options, std::ostream& out, std::ostream& err);

/// Parses argv and runs; the whole command-line front end.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace kdescent::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace charfactor::cli {

enum ExitCode : int {
    kPass = 0,
    kInputError = 1,
    kBoundExceeded = 2,
    kVanishing = 3,
    kCheckFailed = 4,
};

enum class Emit { Json, Poly, Csv };

struct RunConfig {
    std::string command;
    int m = 0;
    int n = 0;
    std::vector<int> lambda;
    int samples = 5;
    int enumeration_bound = 9;
    std::optional<std::string> output;
    std::optional<Emit> emit;
    std::uint64_t seed = 0;
    // verify
    std::optional<std::string> certificate;
    // coxeter
    bool conjugate = false;
    // coset-audit
    std::optional<std::size_t> max_cosets;
    // bench
    int points = 20;
    int repeats = 5;
    // sweep
    int min_entry = 0;
    int max_entry = 0;
    unsigned jobs = 0;
};

/// Parses argv-style arguments (without the program name) and runs one command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_factor(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_denom_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_coset_audit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_coxeter(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace charfactor::cli

#pragma once

// Command-line front end. Every subcommand prints either aligned text or a
// single JSON object {command, inputs, results[, pass]}.
//
// Exit status: 0 success, 1 usage error, 2 domain error, 3 verification
// failure.

#include "cremona/int_matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDomainError = 2,
    kVerificationFailure = 3,
};

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Shared input schema for torus-rank, oracle and sharpness:
///   {"dimension": 2, "q": 5, "chi_order": 4, "sigma": [[0, -1], [1, 0]]}
/// sigma is required; the other keys are optional; unknown keys are
/// rejected; dimension, when present, must match sigma.
struct TorusFile {
    IntegerMatrix sigma{1};
    std::optional<std::uint64_t> dimension;
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> chi_order;
};

/// Throws UsageError on malformed documents.
TorusFile parse_torus_document(const std::string& text);

/// Parses a comma-separated list of unsigned integers ("2,3,5").
std::vector<std::uint64_t> parse_list(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cremona::cli

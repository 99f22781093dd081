#pragma once

#include <restcheck/owl.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace restcheck::cli {

enum class Command { Validate, Translate, Check };
enum class Format { Text, Json };

struct CliConfig {
    Command command = Command::Check;
    std::filesystem::path inputPath;
    std::optional<std::filesystem::path> outputPath; // translate only
    std::string baseIri{owl::kDefaultBaseIri};
    Format format = Format::Text;
    std::optional<unsigned> oracleBound; // check only, <= kMaxOracleBound
};

inline constexpr unsigned kMaxOracleBound = 4;

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInconsistent = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kIoFailure = 3;
inline constexpr int kOracleDisagreement = 4;
} // namespace exit_code

/// Parses "bounded:<k>". Throws std::invalid_argument on malformed input or
/// k outside 1..kMaxOracleBound.
unsigned parseOracleSpec(const std::string &spec);

/// Runs one command. Reports go to `out`; human-readable diagnostics and
/// failures go to `err`. Returns the process exit code.
int run(const CliConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv into a config and runs it; usage errors exit with kInvalid.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace restcheck::cli

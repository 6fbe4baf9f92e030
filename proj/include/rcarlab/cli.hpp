#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace rcarlab::cli {

/// Command-line overrides applied on top of the config file.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    std::optional<std::string> out;
};

/// Exit codes of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 2;  // verification distance above tolerance
inline constexpr int kExitConfigError = 3;
inline constexpr int kExitNumericalFailure = 4;

/// Run a JSON config string (already loaded). Returns an exit code.
int run_config_text(const std::string& config_text, const Overrides& overrides);

/// Load and run a config file. Returns an exit code.
int run_config_file(const std::string& path, const Overrides& overrides);

/// Full argv entry point used by the rcarlab binary.
int run_main(int argc, const char* const* argv);

}  // namespace rcarlab::cli

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace coreblocks::cli {

enum class Status { ok, warning, error };

struct CommandResult {
    Status status = Status::ok;
    nlohmann::json payload;
    std::vector<std::string> diagnostics;
    // Tabular view for csv/plain output; first row is the header.
    std::vector<std::vector<std::string>> table;
    std::string format = "json";  // from --format

    int exit_code() const { return status == Status::error ? 1 : 0; }
};

/// Dispatches a full argv (without the program name). Throws nothing;
/// usage errors come back as status=error with exit code 2 encoded in
/// the "usage" diagnostic.
CommandResult run(const std::vector<std::string>& argv);

/// Renders to the requested format ("json", "csv" or "plain").
std::string render(const CommandResult& r, const std::string& format);

/// True when run() rejected the command line itself (exit code 2).
bool is_usage_error(const CommandResult& r);

}  // namespace coreblocks::cli

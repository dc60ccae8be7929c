#include <iostream>

#include "cli_lib.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    coreblocks::cli::CommandResult r = coreblocks::cli::run(args);
    if (coreblocks::cli::is_usage_error(r)) {
        for (size_t i = 1; i < r.diagnostics.size(); ++i)
            std::cerr << r.diagnostics[i] << '\n';
        return 2;
    }
    for (const std::string& d : r.diagnostics) std::cerr << d << '\n';
    if (r.status != coreblocks::cli::Status::error)
        std::cout << coreblocks::cli::render(r, r.format);
    return r.exit_code();
}

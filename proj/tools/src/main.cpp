#include "gaugeqed/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::filesystem::path> out_dir;
    if (const char* dir = std::getenv("GAUGEQED_OUT_DIR"); dir != nullptr && *dir != '\0') {
        out_dir = dir;
    }
    return gaugeqed::cli::run(args, {std::cout, std::cerr, out_dir});
}

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    const auto result = ccsurg::cli::run({argv + 1, argv + argc});
    auto& out = result.status == ccsurg::cli::Status::ok ? std::cout : std::cerr;
    out << result.text << '\n';
    return result.exit_code;
}

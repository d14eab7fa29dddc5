#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "changhee/cli.hpp"

int main(int argc, char** argv) {
    std::optional<std::string> caps;
    if (const char* env = std::getenv("CHANGHEE_LAB_CAPS")) caps = env;
    return changhee::cli::run(argc, argv, std::cout, std::cerr, caps);
}

#include <sieve/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out;
    const int code = sieve::cli::run_cli(args, out);
    std::cout << out;
    if (!out.empty() && out.back() != '\n') std::cout << '\n';
    return code;
}

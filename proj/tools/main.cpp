#include "negaseq_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return negaseq::cli::run(args, std::cout, std::cerr);
}

#include <iostream>

#include <permprod/cli.hpp>

int main(int argc, char** argv) {
    return permprod::cli::run(argc, argv, std::cout, std::cerr);
}

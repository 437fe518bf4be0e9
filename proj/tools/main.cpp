#include <iostream>

#include "quiverseq/cli.hpp"

int main(int argc, char** argv) { return quiverseq::cli::run(argc, argv, std::cout, std::cerr); }

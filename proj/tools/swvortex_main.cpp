#include <iostream>

#include "swvortex/cli.hpp"

int main(int argc, char** argv) { return swvortex::cli::run(argc, argv, std::cout, std::cerr); }

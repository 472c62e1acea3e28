#include <iostream>

#include "sharplp/cli.hpp"

int main(int argc, char** argv) { return sharplp::cli::main(argc, argv, std::cout, std::cerr); }

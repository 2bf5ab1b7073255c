#include <iostream>

#include "p3fox/cli.hpp"

int main(int argc, char** argv) { return p3fox::cli::main(argc, argv, std::cout, std::cerr); }

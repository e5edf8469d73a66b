#include <iostream>

#include "braidforge/cli.hpp"

int main(int argc, char** argv) { return braidforge::cli::run(argc, argv, std::cout, std::cerr); }

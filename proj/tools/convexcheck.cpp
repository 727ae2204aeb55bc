#include <iostream>

#include "convexcheck/cli.hpp"

int main(int argc, char** argv) { return convexcheck::cli::run(argc, argv, std::cout, std::cerr); }

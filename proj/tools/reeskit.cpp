#include <iostream>

#include "reeskit/cli.hpp"

int main(int argc, char** argv) { return reeskit::run_cli(argc, argv, std::cout, std::cerr); }

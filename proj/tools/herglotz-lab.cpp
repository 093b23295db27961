#include "hz/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hz::cli_main(argc, argv, std::cout, std::cerr); }

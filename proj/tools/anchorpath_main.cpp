#include <iostream>

#include "anchorpath/cli.hpp"

int main(int argc, char** argv) { return anchorpath::cli::run_cli(argc, argv, std::cout, std::cerr); }

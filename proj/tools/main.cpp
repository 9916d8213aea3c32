#include <iostream>

#include "mdl/cli.hpp"

int main(int argc, char** argv) { return mdl::cli::run_cli(argc, argv, std::cout, std::cerr); }

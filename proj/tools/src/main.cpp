#include <iostream>

#include "dforge/cli/app.hpp"

int main(int argc, char** argv) { return dforge::cli::run_cli(argc, argv, std::cout, std::cerr); }

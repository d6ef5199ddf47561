#include <iostream>

#include "nml_cli/runner.hpp"

int main(int argc, char** argv) { return nml::cli::main_entry(argc, argv, std::cout, std::cerr); }

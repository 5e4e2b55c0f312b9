#include <iostream>

#include "tautcalc/cli.hpp"

int main(int argc, char** argv) { return tautcalc::cli::run_command_line(argc, argv, std::cout, std::cerr); }

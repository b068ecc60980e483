#include <iostream>

#include "ncsimo_report/cli.hpp"

int main(int argc, char** argv) { return ncsimo::cli::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "sigcolor/cli.hpp"

int main(int argc, char** argv) { return sigcolor::run_cli(argc, argv, std::cout, std::cerr); }

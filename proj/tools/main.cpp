#include <iostream>

#include "rba/cli.hpp"

int main(int argc, char** argv) { return rba::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "sphpd/cli.hpp"

int main(int argc, char** argv) { return sphpd::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "vcfam/cli.hpp"

int main(int argc, char** argv) { return vcfam::cli::run(argc, argv, std::cout, std::cerr); }

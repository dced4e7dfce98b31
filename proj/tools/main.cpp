#include "rootcontract/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rootcontract::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "eqsub/cli.hpp"

int main(int argc, char** argv) { return eqsub::cli::run(argc, argv, std::cout, std::cerr); }

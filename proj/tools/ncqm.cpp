#include <iostream>

#include "ncqm/cli.hpp"

int main(int argc, char** argv) { return ncqm::cli::run(argc, argv, std::cout, std::cerr); }

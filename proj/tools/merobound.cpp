#include <iostream>

#include "merobound/cli.hpp"

int main(int argc, char** argv) { return merobound::cli::run(argc, argv, std::cout, std::cerr); }

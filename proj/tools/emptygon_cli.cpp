#include <iostream>

#include "emptygon/cli.hpp"

int main(int argc, char** argv) { return emptygon::cli::run(argc, argv, std::cout, std::cerr); }

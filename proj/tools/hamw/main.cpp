#include <iostream>

#include "hamw/cli.hpp"

int main(int argc, char** argv) { return hamw::cli::run(argc, argv, std::cout, std::cerr); }

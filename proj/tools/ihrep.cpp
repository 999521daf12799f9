#include "ihrep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ihrep::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "pgit_cli.hpp"

int main(int argc, char** argv) { return pgit::cli::run(argc, argv, std::cout, std::cerr); }

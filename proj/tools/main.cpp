#include <iostream>

#include "smallcover/cli.hpp"

int main(int argc, char** argv) { return smallcover::run_cli(argc, argv, std::cin, std::cout, std::cerr); }

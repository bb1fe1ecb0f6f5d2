#include <iostream>

#include "sniep/cli.hpp"

int main(int argc, char** argv) { return sniep::run_cli(argc, argv, std::cout, std::cerr); }

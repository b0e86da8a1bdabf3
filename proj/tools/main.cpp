#include <iostream>

#include "greenbound/cli.hpp"

int main(int argc, char** argv) { return greenbound::run_cli(argc, argv, std::cout, std::cerr); }

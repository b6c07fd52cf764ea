#include <iostream>

#include <gpos/cli.hpp>

int main(int argc, char ** argv) { return gpos::run_cli(argc, argv, std::cout, std::cerr); }

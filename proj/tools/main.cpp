#include <iostream>

#include "qinfo/cli.hpp"

int main(int argc, char** argv) { return qinfo::run_cli(argc, argv, std::cout, std::cerr); }

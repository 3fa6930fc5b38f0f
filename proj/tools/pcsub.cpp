#include "pcsub/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pcsub::parse_and_dispatch(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "lieclass/cli.hpp"

int main(int argc, char** argv) { return lieclass::run_command(argc, argv, std::cout, std::cerr); }

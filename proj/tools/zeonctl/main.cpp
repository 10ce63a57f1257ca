#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return zeonctl::run(argc, argv, std::cout, std::cerr); }

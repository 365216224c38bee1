#include <iostream>

#include "eigensteps/cli.hpp"

int main(int argc, char** argv) { return eigensteps::run(argc, argv, std::cout, std::cerr); }

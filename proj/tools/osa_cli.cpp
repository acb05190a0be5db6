#include <iostream>

#include "osa/cli.hpp"

int main(int argc, char** argv) { return osa::run(argc, argv, std::cout, std::cerr); }

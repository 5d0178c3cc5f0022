#include <iostream>

#include "convexnormals/cli.hpp"

int main(int argc, char** argv) { return cvxn::run(argc, argv, std::cout, std::cerr); }

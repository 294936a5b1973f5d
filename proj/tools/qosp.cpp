#include <iostream>

#include "qosp/cli.hpp"

int main(int argc, char** argv) { return qosp::run(argc, argv, std::cout, std::cerr); }

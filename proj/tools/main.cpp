#include <iostream>

#include "phasegraph/cli.hpp"

int main(int argc, char** argv) { return phasegraph::run(argc, argv, std::cout, std::cerr); }

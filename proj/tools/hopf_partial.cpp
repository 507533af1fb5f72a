#include <iostream>

#include "hopfpartial/cli.hpp"

int main(int argc, char** argv) { return hp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr); }

#include <iostream>

#include "ssn/cli.hpp"

int main(int argc, char** argv) { return ssn::cli::run(argc, argv, std::cout, std::cerr); }

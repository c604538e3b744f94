#include <iostream>

#include "pretzel/cli.hpp"

int main(int argc, char** argv) { return pretzel::cli::run(argc, argv, std::cout, std::cerr); }

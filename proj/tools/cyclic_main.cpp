#include <iostream>

#include "cyclic/app/cli.hpp"

int main(int argc, char** argv) { return cyclic::app::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "germs/cli.hpp"

int main(int argc, char** argv) { return germs::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "zrp/cli/app.hpp"

int main(int argc, char** argv) { return zrp::cli::run_cli(argc, argv, std::cout, std::cerr); }

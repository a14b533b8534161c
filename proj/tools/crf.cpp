#include <iostream>

#include "crf/cli/commands.hpp"

int main(int argc, char** argv) { return crf::cli::run(argc, argv, std::cout, std::cerr); }

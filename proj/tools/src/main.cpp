#include <iostream>

#include "lsakit_cli/app.hpp"

int main(int argc, char** argv) { return lsakit::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "nel/cli/app.hpp"

int main(int argc, char** argv) { return nel::cli::run(argc, argv, std::cout, std::cerr); }

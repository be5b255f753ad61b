#include <iostream>

#include "vlink/cli/app.hpp"

int main(int argc, char** argv) { return vlink::cli::run(argc, argv, std::cout, std::cerr); }

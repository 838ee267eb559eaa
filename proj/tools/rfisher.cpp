#include "rfisher/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rfisher::cli::run(argc, argv, std::cout, std::cerr); }

#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return flopit::cli::run(argc, argv, std::cout, std::cerr); }

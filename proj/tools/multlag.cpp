#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) { return multlag::cli::run(argc, argv, std::cout, std::cerr); }

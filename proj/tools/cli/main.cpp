#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) { return vwbm::cli::run(argc, argv, std::cout, std::cerr); }

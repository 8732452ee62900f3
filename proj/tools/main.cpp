#include <iostream>

#include "bistat_cli/app.hpp"

int main(int argc, char** argv) { return bistat::cli::run(argc, argv, std::cout, std::cerr); }

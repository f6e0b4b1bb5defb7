#include <iostream>

#include "dtwmean/app.hpp"

int main(int argc, char** argv) { return dtwmean::run_cli(argc, argv, std::cout, std::cerr); }

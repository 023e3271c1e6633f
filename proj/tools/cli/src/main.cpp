#include <iostream>

#include "chipnoise_cli/app.hpp"

int main(int argc, char** argv) { return chipnoise::cli::run(argc, argv, std::cout, std::cerr); }

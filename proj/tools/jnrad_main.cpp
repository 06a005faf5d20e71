#include <jnrad/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return jnrad::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "rsiegel/cli.hpp"

int main(int argc, char** argv) {
  return rsiegel::cli::run_cli(argc, argv, std::cout, std::cerr);
}

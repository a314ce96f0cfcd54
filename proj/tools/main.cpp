#include <iostream>

#include "leja/cli.hpp"

int main(int argc, char** argv) {
  return leja::run_cli(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "catalan_lab/cli.hpp"

int main(int argc, char** argv) {
  return catalan_lab::run_cli(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "termrank/cli.hpp"

int main(int argc, char** argv) {
  return termrank::cli::run(argc, argv, std::cout, std::cerr);
}

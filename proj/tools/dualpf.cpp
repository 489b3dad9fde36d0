#include <iostream>

#include "dualpf/cli.hpp"

int main(int argc, char** argv) {
  return dualpf::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "gabikit/cli.hpp"

int main(int argc, char** argv) {
  return gabikit::cli_main(argc, argv, std::cout, std::cerr);
}

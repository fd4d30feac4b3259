#include <iostream>

#include "primeclique/cli.hpp"

int main(int argc, char** argv) {
  return primeclique::cli::run(argc, argv, std::cout, std::cerr);
}

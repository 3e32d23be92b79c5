#include <iostream>

#include "surfband/cli.hpp"

int main(int argc, char** argv) {
  return surfband::main_entry(argc, argv, std::cout, std::cerr);
}

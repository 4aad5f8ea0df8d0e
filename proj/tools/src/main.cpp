#include <iostream>

#include "ineqcli/commands.hpp"

int main(int argc, char** argv) {
  return ineqcli::run(argc, argv, std::cout, std::cerr);
}

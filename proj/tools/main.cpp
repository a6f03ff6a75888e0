#include <iostream>

#include "arithdyn/cli.hpp"

int main(int argc, char** argv) {
  return arithdyn::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

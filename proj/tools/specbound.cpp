#include <iostream>
#include <vector>

#include "specbound/cli.hpp"

int main(int argc, char** argv) {
  return specbound::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                             std::cerr);
}

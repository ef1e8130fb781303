#include <iostream>

#include "succinct/cli.hpp"

int main(int argc, char** argv) {
  return succinct::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

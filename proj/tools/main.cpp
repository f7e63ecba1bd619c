#include <iostream>
#include <string>
#include <vector>

#include "chained/cli.hpp"

int main(int argc, char** argv) {
  return chained::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}

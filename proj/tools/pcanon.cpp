#include <iostream>

#include "pcanon/cli.hpp"

int main(int argc, char** argv) {
  return pcanon::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

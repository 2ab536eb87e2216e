#include <iostream>

#include "ambrep/cli.hpp"

int main(int argc, char** argv) {
  return ambrep::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

#include <iostream>

#include "frieze_lab/cli.hpp"

int main(int argc, char** argv) {
  return frieze_lab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

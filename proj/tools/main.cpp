#include <iostream>

#include "parafam/cli.hpp"

int main(int argc, char** argv) {
  return parafam::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

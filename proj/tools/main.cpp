#include <iostream>

#include "wconvex/cli.hpp"

int main(int argc, char** argv) {
  return wconvex::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
